#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "lelat/io.hpp"
#include "lelat/run.hpp"

using namespace lelat;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "lelat-test-cli";
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int exec(const std::string& command) {
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunConfig base(Command command, Family family) {
    RunConfig cfg;
    cfg.command = command;
    cfg.family = family;
    return cfg;
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_sig(1.0) == "1");
    CHECK(format_sig(0.0001234567890123456) == "0.000123456789012");
    CHECK(format_sig(1.5, 3) == "1.5");
    CHECK(round_sig(1.23456789012345678, 12) == doctest::Approx(1.23456789012).epsilon(1e-13));
    CHECK_THROWS_AS(format_sig(std::numeric_limits<double>::infinity()), io_error);
    CHECK_THROWS_AS(format_sig(std::nan("")), io_error);
}

TEST_CASE("atomic file writes") {
    const fs::path dir = work_dir();
    const fs::path target = dir / "artifact.csv";
    write_file_atomic(target, "a,b\n1,2\n");
    CHECK(slurp(target) == "a,b\n1,2\n");
    CHECK_FALSE(fs::exists(dir / "artifact.csv.tmp"));
    write_file_atomic(target, "replaced\n");
    CHECK(slurp(target) == "replaced\n");
    CHECK_THROWS_AS(write_file_atomic(dir / "missing-dir" / "x.csv", "y"), io_error);
}

TEST_CASE("build command emits the edge list") {
    std::ostringstream console;
    RunConfig cfg = base(Command::build, Family::square);
    cfg.m = cfg.n = 3;
    CHECK(run(cfg, console) == 0);
    CHECK(console.str().substr(0, 4) == "n 9\n");

    const fs::path dir = work_dir();
    cfg.out = (dir / "g.edges").string();
    std::ostringstream console2;
    CHECK(run(cfg, console2) == 0);
    const std::string text = slurp(dir / "g.edges");
    CHECK(text.substr(0, 4) == "n 9\n");
    std::istringstream in(text);
    const Graph back = from_edge_list(in);
    CHECK(back.n_edges() == 18);
}

TEST_CASE("spectrum command cross-checks closed form against the eigensolver") {
    const fs::path dir = work_dir();
    std::ostringstream console;
    RunConfig cfg = base(Command::spectrum, Family::m3342);
    cfg.format = OutputFormat::json;
    cfg.out = (dir / "spec.json").string();
    CHECK(run(cfg, console) == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "spec.json"));
    CHECK(j["source"] == "closed_form");
    CHECK(j["count"] == 24);
    CHECK(j["comparison"]["pass"] == true);
    CHECK(j["comparison"]["max_abs_dev"].get<double>() <= 1e-8);
    CHECK(console.str().find("pass") != std::string::npos);
}

TEST_CASE("lel command prints value, per-vertex and bounds") {
    std::ostringstream console;
    RunConfig cfg = base(Command::lel, Family::hexagonal);
    cfg.m = cfg.n = 9;
    CHECK(run(cfg, console) == 0);
    CHECK(console.str().find("1.63531476") != std::string::npos);
    CHECK(console.str().find("bounds [") != std::string::npos);
}

TEST_CASE("constant and kdim artifacts") {
    const fs::path dir = work_dir();
    RunConfig cfg = base(Command::constant, Family::j312);
    cfg.format = OutputFormat::json;
    cfg.out = (dir / "c.json").string();
    std::ostringstream console;
    CHECK(run(cfg, console) == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "c.json"));
    CHECK(j["label"] == "j312");
    CHECK(j["constant"].get<double>() == doctest::Approx(1.6176326515).epsilon(1e-7));
    CHECK(j["tabulated_weighting"]["constant"].get<double>() ==
          doctest::Approx(1.3375).epsilon(5e-4));
    CHECK(j["level_values"].size() == 4);

    RunConfig kcfg;
    kcfg.command = Command::kdim;
    kcfg.k = 1;
    kcfg.out = (dir / "k.csv").string();
    std::ostringstream kconsole;
    CHECK(run(kcfg, kconsole) == 0);
    const std::string csv = slurp(dir / "k.csv");
    CHECK(csv.find("label,rule,points_per_axis,levels,constant,error_estimate") == 0);
    CHECK(csv.find("dim=1,midpoint") != std::string::npos);
}

TEST_CASE("converge artifacts include the plot file") {
    const fs::path dir = work_dir();
    RunConfig cfg = base(Command::converge, Family::square);
    cfg.m = cfg.n = 16;
    cfg.out = (dir / "conv.csv").string();
    std::ostringstream console;
    CHECK(run(cfg, console) == 0);
    const std::string csv = slurp(dir / "conv.csv");
    CHECK(csv.find("m,n,boundary,per_vertex,deviation") == 0);
    CHECK(csv.find("16,16,torus,") != std::string::npos);
    CHECK(csv.find("4,4,free,") != std::string::npos);  // halving ladder 4 -> 8 -> 16
    const std::string dat = slurp(dir / "conv.dat");
    CHECK(dat.find("# torus") == 0);
    CHECK(dat.find("# free") != std::string::npos);
}

TEST_CASE("audit artifact carries the adjudication") {
    const fs::path dir = work_dir();
    RunConfig cfg = base(Command::audit, Family::tkl);
    cfg.out = (dir / "audit.json").string();
    std::ostringstream console;
    CHECK(run(cfg, console) == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "audit.json"));
    CHECK(j["oracle"]["pass"] == true);
    CHECK(j["branches"]["selected"] == "half");
    CHECK(j["branches"]["dev_quarter"].get<double>() > 0.5);
    CHECK(j["consistent"]["per_vertex"] == false);
    CHECK(j["findings"].size() >= 3);
}

TEST_CASE("perturb artifact") {
    const fs::path dir = work_dir();
    RunConfig cfg;
    cfg.command = Command::perturb;
    cfg.seed = 7;
    cfg.trials = 10;
    cfg.out = (dir / "p.json").string();
    std::ostringstream console;
    CHECK(run(cfg, console) == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "p.json"));
    CHECK(j["violations"] == 0);
    CHECK(j["trials"] == 10);
    CHECK(j["seed"] == 7);
}

TEST_CASE("distinct failures map to distinct diagnostics and statuses") {
    std::ostringstream console;

    RunConfig no_family;
    no_family.command = Command::spectrum;
    CHECK(run(no_family, console) == 1);
    CHECK(console.str().find("requires --family") != std::string::npos);

    console.str("");
    RunConfig bad_size = base(Command::build, Family::m3342);
    bad_size.m = 1;
    bad_size.n = 4;
    CHECK(run(bad_size, console) == 1);
    CHECK(console.str().find("m >= 2") != std::string::npos);

    console.str("");
    RunConfig bad_format = base(Command::lel, Family::square);
    bad_format.format = OutputFormat::edgelist;
    CHECK(run(bad_format, console) == 1);
    CHECK(console.str().find("unsupported output format") != std::string::npos);

    console.str("");
    RunConfig bad_grid = base(Command::constant, Family::square);
    bad_grid.grid = 1000;
    CHECK(run(bad_grid, console) == 1);
    CHECK(console.str().find("power of two") != std::string::npos);

    console.str("");
    RunConfig bad_out = base(Command::constant, Family::square);
    bad_out.out = "/nonexistent-dir-for-sure/x.csv";
    CHECK(run(bad_out, console) == 2);
    CHECK(console.str().find("i/o error") != std::string::npos);

    console.str("");
    RunConfig small_cap = base(Command::lel, Family::hexagonal);
    small_cap.boundary = Boundary::free;
    small_cap.m = small_cap.n = 15;
    small_cap.cap = 100;
    CHECK(run(small_cap, console) == 1);
    CHECK(console.str().find("cap") != std::string::npos);
}

TEST_CASE("in-process runs with one config are byte-identical") {
    const fs::path dir = work_dir();
    RunConfig cfg = base(Command::converge, Family::m3342);
    for (const char* name : {"a.json", "b.json"}) {
        RunConfig c = cfg;
        c.format = OutputFormat::json;
        c.out = (dir / name).string();
        std::ostringstream console;
        REQUIRE(run(c, console) == 0);
    }
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
    CHECK(slurp(dir / "a.dat") == slurp(dir / "b.dat"));
}

TEST_CASE("the installed binary parses flags and reports errors") {
    const fs::path dir = work_dir();
    const std::string bin = LELAT_BIN;
    CHECK(exec(bin + " --help > /dev/null 2>&1") == 0);
    CHECK(exec(bin + " build --family square --m 4 --n 4 --out " + (dir / "t.edges").string() +
               " > /dev/null 2>&1") == 0);
    CHECK(slurp(dir / "t.edges").substr(0, 5) == "n 16\n");
    CHECK(exec(bin + " build --family nosuch > /dev/null 2>&1") != 0);
    CHECK(exec(bin + " spectrum > /dev/null 2>&1") != 0);  // missing required --family
    CHECK(exec(bin + " kdim 9 > /dev/null 2>&1") != 0);
    CHECK(exec(bin + " lel --family square --boundary open > /dev/null 2>&1") != 0);
}
