#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = RMT_CLI_PATH;

struct RunResult {
    int code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "rmt_cli_test_output.txt";
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(raw);
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
}

fs::path workdir() {
    const fs::path d = fs::temp_directory_path() / "rmt_cli_tests";
    fs::create_directories(d);
    return d;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json strip_timestamp(json j) {
    j.erase("timestamp");
    j.erase("out");
    return j;
}

}  // namespace

TEST_CASE("identity suites") {
    const fs::path out = workdir() / "id.json";
    RunResult r = run("identity --family ber2 --p 3 --q 3 --trials 20 --seed 7 --tol 1e-9 --out " +
                      out.string());
    CHECK(r.code == 0);
    const json rep = json::parse(slurp(out));
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("max_rel_dev").get<double>() <= 1e-9);

    CHECK(run("identity --family ber2 --p 2 --q 1 --trials 10").code == 0);
    CHECK(run("identity --family ber1 --p 4 --q 2 --trials 10").code == 0);
    CHECK(run("identity --family ber4 --p 2 --q 3 --trials 10").code == 0);
    CHECK(run("identity --family vandermonde --p 0 --trials 3").code == 0);
    CHECK(run("identity --family nonsense --trials 1").code == 2);
    CHECK(run("bogus-subcommand").code == 2);
}

TEST_CASE("average command") {
    const fs::path dir = workdir();
    const fs::path spec = dir / "avg_spec.json";
    write_file(spec, R"({"N":1,"ensemble":"gaussian","kappa1":[[0.4,0.9]],"kappa2":[[0.2,0.0]]})");
    const fs::path out = dir / "avg.json";

    RunResult cmp = run("average --spec " + spec.string() + " --method compare --tol 1e-6 --out " +
                        out.string());
    CHECK(cmp.code == 0);
    const json rep = json::parse(slurp(out));
    CHECK(rep.at("pass").get<bool>());
    CHECK(rep.at("rel_dev").get<double>() <= 1e-6);

    // Plain value in the det route.
    CHECK(run("average --spec " + spec.string() + " --method det --out " + out.string()).code ==
          0);
    CHECK(json::parse(slurp(out)).contains("value_re"));

    // Empty parameter lists report the normalization constant.
    const fs::path nspec = dir / "norm_spec.json";
    write_file(nspec, R"({"N":1,"ensemble":"gaussian"})");
    CHECK(run("average --spec " + nspec.string() + " --method det --out " + out.string()).code ==
          0);
    const double norm = json::parse(slurp(out)).at("value_re").get<double>();
    CHECK(std::abs(norm - std::sqrt(std::acos(-1.0))) < 1e-8);

    // Coincident parameters are rejected as invalid input.
    const fs::path cspec = dir / "coincident_spec.json";
    write_file(cspec,
               R"({"N":2,"ensemble":"gaussian","kappa2":[[0.2,0.0],[0.2,0.0]]})");
    CHECK(run("average --spec " + cspec.string() + " --method det").code == 2);

    // Missing spec file.
    CHECK(run("average --spec " + (dir / "no_such.json").string() + " --method det").code == 2);
}

TEST_CASE("average reproducibility") {
    const fs::path dir = workdir();
    const fs::path spec = dir / "avg_spec2.json";
    write_file(spec, R"({"N":2,"ensemble":"gaussian","kappa1":[[0.5,0.5]],"kappa2":[[0.1,0.0]]})");
    const fs::path o1 = dir / "rep1.json", o2 = dir / "rep2.json";
    CHECK(run("average --spec " + spec.string() + " --method oracle-mc --trials 20000 --seed 11 --out " +
              o1.string())
              .code == 0);
    CHECK(run("average --spec " + spec.string() + " --method oracle-mc --trials 20000 --seed 11 --out " +
              o2.string())
              .code == 0);
    CHECK(strip_timestamp(json::parse(slurp(o1))) == strip_timestamp(json::parse(slurp(o2))));
}

TEST_CASE("kpoint command") {
    const fs::path dir = workdir();
    const fs::path spec = dir / "field_spec.json";
    write_file(spec,
               R"({"N":3,"alpha":0.0,"field":[0,0,0],"ensemble":{"kind":"laguerre","nu":0.0,"c":1.0}})");
    const fs::path out = dir / "grid.csv";
    RunResult r = run("kpoint --spec " + spec.string() + " --grid 0,24,800 --out " + out.string());
    CHECK(r.code == 0);

    // CSV has a header and 800 rows; the density integrates to about N.
    std::ifstream csv(out);
    std::string line;
    CHECK(std::getline(csv, line));
    CHECK(line == "x1,re,im");
    double integral = 0.0, prev_x = 0.0, prev_v = 0.0;
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        std::istringstream ls(line);
        double x, re, im;
        char c1, c2;
        ls >> x >> c1 >> re >> c2 >> im;
        if (rows > 0) integral += 0.5 * (re + prev_v) * (x - prev_x);
        prev_x = x;
        prev_v = re;
        ++rows;
    }
    CHECK(rows == 800);
    CHECK(std::abs(integral - 3.0) < 1e-3);

    // Companion manifest exists.
    const json m = json::parse(slurp(out.string() + ".json"));
    CHECK(m.at("rows").get<std::size_t>() == 800);

    // Reruns are byte-identical on the CSV side.
    const fs::path out2 = dir / "grid2.csv";
    CHECK(run("kpoint --spec " + spec.string() + " --grid 0,24,800 --out " + out2.string()).code ==
          0);
    CHECK(slurp(out) == slurp(out2));

    // Degenerate field eigenvalues with nonzero coupling.
    const fs::path dspec = dir / "degenerate_spec.json";
    write_file(dspec,
               R"({"N":2,"alpha":0.5,"field":[0.8,0.8],"ensemble":{"kind":"laguerre","nu":0.0,"c":1.0}})");
    CHECK(run("kpoint --spec " + dspec.string() + " --grid 0,5,10 --out " +
              (dir / "deg.csv").string())
              .code == 4);

    // Correlation order above N.
    CHECK(run("kpoint --spec " + dspec.string() + " --grid 0,5,4 --grid 0,5,4 --grid 0,5,4 --out " +
              (dir / "bad.csv").string())
              .code == 2);

    // Source-averaged kernel route produces a grid.
    const fs::path sspec = dir / "source_spec.json";
    write_file(
        sspec,
        R"({"N":2,"alpha":0.3,"field":[0,0],"ensemble":{"kind":"gaussian","c":1.0},"source":{"kind":"quaternion","density":{"kind":"gaussian","c":2.0}}})");
    CHECK(run("kpoint --spec " + sspec.string() + " --grid -2,2,9 --out " +
              (dir / "source.csv").string())
              .code == 0);
}

TEST_CASE("theorem suites") {
    CHECK(run("theorems --which andreief --draws 3 --n 2 --k 1 --l 1 --seed 1").code == 0);
    CHECK(run("theorems --which debruijn --draws 3 --n 2 --l 0 --seed 1").code == 0);
    CHECK(run("theorems --which andreief --draws 0").code == 2);
    CHECK(run("theorems --which neither --draws 1").code == 2);
}
