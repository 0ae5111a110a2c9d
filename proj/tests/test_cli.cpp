#include "doctest.h"

#include <fstream>
#include <sstream>

#include "mzlab/cli.hpp"
#include "mzlab/registry.hpp"
#include "test_util.hpp"

using namespace mzlab;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("grammar examples") {
    Poly a = parse_poly("x^2 - 1", Ring::q(), {"x"}, false);
    CHECK(a.terms.size() == 2);
    CHECK(coeff_of(a, ExpVec{2}) == Coeff::one(Ring::q()));

    Poly b = parse_poly("x + x^-1", Ring::fp(2), {"x"}, true);
    CHECK(b.terms.size() == 2);

    Poly c = parse_poly("x*y - 2*y", Ring::q(), {"x", "y"}, false);
    CHECK(coeff_of(c, ExpVec{0, 1}) == Coeff::from_int(Ring::q(), -2));

    CHECK(parse_poly("(x + 1)*(x - 1)", Ring::q(), {"x"}, false) ==
          parse_poly("x^2 - 1", Ring::q(), {"x"}, false));
    CHECK(parse_poly("1/2*x", Ring::q(), {"x"}, false) ==
          scale(parse_poly("x", Ring::q(), {"x"}, false),
                Coeff::from_mpq(Ring::q(), mpq_class(1, 2))));
}

TEST_CASE("grammar errors carry positions") {
    try {
        parse_poly("x + ", Ring::q(), {"x"}, false);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }

    CHECK_THROWS_AS(parse_poly("x^-1", Ring::q(), {"x"}, false), negative_exponent_error);
    CHECK_THROWS_AS(parse_poly("z + 1", Ring::q(), {"x"}, false), unknown_variable_error);
    // no implicit multiplication
    CHECK_THROWS_AS(parse_poly("2x", Ring::q(), {"x"}, false), parse_error);
    CHECK_THROWS_AS(parse_poly("x y", Ring::q(), {"x", "y"}, false), parse_error);
    // exponents attach to variables only
    CHECK_THROWS_AS(parse_poly("(x + 1)^2", Ring::q(), {"x"}, false), parse_error);
    CHECK_THROWS_AS(parse_poly("2^3", Ring::q(), {"x"}, false), parse_error);
    // rationals cannot land in Z
    CHECK_THROWS_AS(parse_poly("1/2*x", Ring::z(), {"x"}, false), parse_error);
}

TEST_CASE("print/parse round trip on grammar-valid strings") {
    for (const std::string& s :
         {std::string("x^2 - 1"), std::string("1/2*x*y - 3*y^2 + 7"), std::string("0"),
          std::string("x*y*x"), std::string("(x + y)*(x - y)")}) {
        Poly f = parse_poly(s, Ring::q(), {"x", "y"}, false);
        CHECK(parse_poly(to_string(f), Ring::q(), {"x", "y"}, false) == f);
    }
    Poly g = parse_poly("2*t^-1*x + t^2*y - 3", Ring::qlaurent(), {"x", "y"}, false);
    CHECK(parse_poly(to_string(g), Ring::qlaurent(), {"x", "y"}, false) == g);
}

TEST_CASE("json reports are byte-stable") {
    RunResult a = run({"verify", "ex2.9", "--format", "json"});
    RunResult b = run({"verify", "ex2.9", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"status\": \"verified\"") != std::string::npos);

    RunResult c = run({"verify", "thm4.5", "--format", "json"});
    RunResult d = run({"verify", "thm4.5", "--format", "json"});
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("exit code contract") {
    CHECK(run({"verify", "nosuch"}).code == 2);
    CHECK(run({"bogus-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"polytope", "--vars", "x,y", "--laurent", "x + x*y"}).code == 0);
    CHECK(run({"ms-falsify", "--ring", "q", "--vars", "x"}).code == 2);
    CHECK(run({"radical-probe", "--ring", "z", "--vars", "x", "--max-power", "6",
               "--subspace-from-endo", "2*x", "x"})
              .code == 0);
    // with an explicit source degree the Frobenius image overflows its target
    CHECK(run({"image", "--ring", "fp:2", "--vars", "x", "--endo", "x^2", "--source-degree",
               "12"})
              .code == 3);
    // without one the source shrinks until the images fit
    RunResult img = run({"image", "--ring", "fp:2", "--vars", "x", "--endo", "x^2"});
    CHECK(img.code == 0);
    CHECK(img.out.find("source degree <= 6") != std::string::npos);
}

TEST_CASE("radical-probe output matches the closed form") {
    RunResult r = run({"radical-probe", "--ring", "z", "--vars", "x", "--max-power", "6",
                       "--subspace-from-endo", "2*x", "x"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fails at m in {2,3,4,5,6}") != std::string::npos);
}

TEST_CASE("polytope command output") {
    RunResult r = run({"polytope", "--vars", "x,y", "--laurent", "x + x*y", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("outside") != std::string::npos);

    RunResult s = run({"polytope", "--vars", "x", "--laurent", "x + x^-1"});
    CHECK(s.code == 0);
    CHECK(s.out.find("inside") != std::string::npos);
    CHECK(s.out.find("m = 2") != std::string::npos);
}

TEST_CASE("list-examples covers the registry") {
    RunResult r = run({"list-examples"});
    CHECK(r.code == 0);
    for (const ExampleInfo& e : example_registry())
        CHECK(r.out.find(e.id) != std::string::npos);
}

TEST_CASE("ms-decide on a structure constant file") {
    std::string path = "test_alg_dual_f2.txt";
    {
        std::ofstream f(path);
        f << "# F_2[x]/(x^2)\n"
             "dim 2 field fp:2\n"
             "1 1 1 1\n"
             "1 2 2 1\n"
             "2 1 2 1\n"
             "unit 1 0\n";
    }
    RunResult yes = run({"ms-decide", "--algebra", path, "--span", "0 1"});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("the span is a Mathieu subspace") != std::string::npos);
    CHECK(yes.out.find("routes agree") != std::string::npos);

    RunResult no = run({"ms-decide", "--algebra", path, "--span", "1 0"});
    CHECK(no.code == 0);
    CHECK(no.out.find("NOT a Mathieu subspace") != std::string::npos);

    RunResult usage = run({"ms-decide", "--algebra", path});
    CHECK(usage.code == 2);
}

TEST_CASE("decompose command") {
    std::string path = "test_alg_f5_x3.txt";
    {
        std::ofstream f(path);
        f << "dim 3 field fp:5\n"
             "1 1 1 1\n1 2 2 1\n1 3 3 1\n2 1 2 1\n2 2 3 1\n3 1 3 1\n"  // F_5[x]/(x^3)
             "unit 1 0 0\n";
    }
    RunResult r = run({"decompose", "--algebra", path, "--matrix", "1 0 0; 0 2 0; 0 0 4",
                       "--kind", "multiplicative", "--law", "endo"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lambda = 1 (dim 1)") != std::string::npos);
    CHECK(r.out.find("lambda = 2 (dim 1)") != std::string::npos);
    CHECK(r.out.find("grading check on block products: holds") != std::string::npos);
    CHECK(r.out.find("no nonzero idempotent") != std::string::npos);

    RunResult bad = run({"decompose", "--algebra", path, "--matrix", "0 1 0; 0 0 1; 1 0 0"});
    CHECK(bad.code == 1);  // cyclic operator does not split over F_5

    RunResult hinted = run({"decompose", "--algebra", path, "--matrix", "1 0 0; 0 2 0; 0 0 4",
                            "--kind", "multiplicative", "--eigenvalues", "1,2,4"});
    CHECK(hinted.code == 0);
    CHECK(hinted.out.find("lambda = 4 (dim 1)") != std::string::npos);
}

TEST_CASE("ms-falsify command end to end") {
    RunResult r = run({"ms-falsify", "--ring", "fp:2", "--vars", "x", "--laurent", "--endo",
                       "x^-1", "--candidate", "x + x^-1", "--left", "x", "--max-power", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("certificate established") != std::string::npos);

    // x is not in the radical of Im(I - phi_2) over Q: certificate impossible
    RunResult no = run({"ms-falsify", "--ring", "q", "--vars", "x", "--endo", "2*x",
                        "--candidate", "x", "--left", "x", "--max-power", "6"});
    CHECK(no.code == 1);
    CHECK(no.out.find("falsified") != std::string::npos);
}

TEST_SUITE_END();
