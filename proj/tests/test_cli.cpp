// Exit-code contract of the command line tool: 0 success, 1 failed check,
// 2 usage, 3 I/O.  The binary path comes in through PGBLOCK_CLI.

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "pgblock/catalog.hpp"
#include "pgblock/io.hpp"

using namespace pgblock;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(PGBLOCK_CLI) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "pgblock_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path dump(int q, int index) {
  fs::path p = scratch() / ("b" + std::to_string(q) + "_" + std::to_string(index) + ".pts");
  Field f = catalog_field(q);
  PlaneIndex plane(f);
  std::ofstream out(p);
  write_pointset(plane, builtin(plane, q, index), out);
  return p;
}

}  // namespace

TEST_CASE("verify exit codes", "[cli]") {
  CHECK(run("verify --builtin 13 1") == 0);
  CHECK(run("verify --builtin 13 1 --json") == 0);
  CHECK(run("verify --builtin 11 1") == 2);  // unknown entry
  CHECK(run("verify " + dump(13, 1).string()) == 0);
  CHECK(run("verify /nonexistent/file.pts") == 3);
  SECTION("a non-blocking file fails with 1") {
    fs::path p = scratch() / "broken.pts";
    std::ofstream out(p);
    out << "q 13\npoint 1 1 1\n";
    out.close();
    CHECK(run("verify " + p.string()) == 1);
  }
  SECTION("a malformed file is an I/O error") {
    fs::path p = scratch() / "malformed.pts";
    std::ofstream out(p);
    out << "q 13\npoint 13 0 1\n";
    out.close();
    CHECK(run("verify " + p.string()) == 3);
  }
}

TEST_CASE("search exit codes", "[cli]") {
  CHECK(run("search --q 9") == 0);
  CHECK(run("search --q 5") == 0);
  CHECK(run("search") == 2);         // missing --q
  CHECK(run("search --q 2") == 2);   // out of range
  SECTION("solutions are written out") {
    fs::path p = scratch() / "q13";
    CHECK(run("search --q 13 --out " + p.string()) == 0);
    CHECK(fs::exists(p.string() + ".1"));
    CHECK(run("verify " + p.string() + ".1") == 0);
  }
}

TEST_CASE("hill exit codes", "[cli]") {
  CHECK(run("hill --q 4") == 0);
  CHECK(run("hill --q 17") == 2);  // unsupported range
}

TEST_CASE("export-ilp writes a model", "[cli]") {
  fs::path p = scratch() / "q4.lp";
  CHECK(run("export-ilp --q 4 --fix-frame --out " + p.string()) == 0);
  CHECK(fs::file_size(p) > 0);
  CHECK(run("export-ilp --q 4") == 2);  // --out required
}

TEST_CASE("distribution", "[cli]") {
  CHECK(run("distribution " + dump(13, 1).string()) == 0);
  CHECK(run("distribution /nonexistent.pts") == 3);
  CHECK(run("distribution") == 2);
}

TEST_CASE("equiv exit codes", "[cli]") {
  fs::path a = dump(19, 1), b = dump(19, 2);
  CHECK(run("equiv " + a.string() + " " + a.string()) == 0);
  CHECK(run("equiv " + a.string() + " " + b.string()) == 1);
  SECTION("mismatched fields are an input error") {
    fs::path c = dump(13, 1);
    CHECK(run("equiv " + a.string() + " " + c.string()) == 3);
  }
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run("") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("search --q 9 --bogus-flag") == 2);
}
