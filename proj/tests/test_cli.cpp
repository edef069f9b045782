#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <sys/wait.h>

#include <doctest.h>

#include "slw/io.hpp"
#include "slw/verify.hpp"

namespace fs = std::filesystem;

namespace {
  struct Run {
    int         code = -1;
    std::string out;
  };

  Run cli(const std::string& args) {
    std::string cmd = std::string(SLW_CLI) + " " + args + " 2>/dev/null";
    Run         r;
    FILE*       p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) {
      r.out.append(buf.data(), n);
    }
    int status = pclose(p);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "slw_cli_test") {
      fs::remove_all(path);
      fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& f) const { return (path / f).string(); }
  };
}  // namespace

TEST_CASE("construct") {
  auto a = cli("construct alpha --n 3");
  CHECK(a.code == 0);
  CHECK(a.out.find("map z -> abaabaaab\n") != std::string::npos);
  CHECK(cli("construct alpha --n 1").code == 64);
  CHECK(cli("construct nothing").code == 64);
  CHECK(cli("construct alpha --n x").code == 64);
  CHECK(cli("construct closed --n 5 --genus 2").code == 64);
  CHECK(cli("construct alpha --n 3 --rep-out /dev/null").code == 64);

  auto d = cli("construct double --n 2");
  CHECK(d.code == 0);
  auto m = slw::read_map(d.out);
  CHECK(m.target.alphabet.size() == 6);
  CHECK(m.target.relators.size() == 5);

  for (auto const* args : {"fig8 --n 3", "twist --n 3 --m 2", "quotient --n 3 --genus 3",
                           "quotient --sub pants --n 3 --genus 2", "closed --n 5 --genus 3",
                           "extend --base fig8"}) {
    CHECK_MESSAGE(cli(std::string("construct ") + args).code == 0, args);
  }
  CHECK(cli("construct alpha --n 4").out == cli("construct alpha --n 4").out);
}

TEST_CASE("verify exit codes and reports") {
  TempDir dir;
  REQUIRE(cli("construct alpha --n 5 -o " + (dir / "a5.map")).code == 0);
  auto r = cli("verify " + (dir / "a5.map") + " --k 2 --L 6");
  CHECK(r.code == 0);
  auto report = slw::parse_report(r.out);
  CHECK(report.verdict == slw::Verdict::pass);
  CHECK(report.runtime_seconds == 0);

  slw::write_file(dir / "killer.map",
                  "map killer\nsource\nsurface 0 4\ntarget\ngroup free\ngenerators a b\n"
                  "images\nmap x -> 1\nmap y -> b\nmap z -> a\n");
  CHECK(cli("verify " + (dir / "killer.map") + " --k 0 --L 2").code == 1);
  CHECK(cli("verify " + (dir / "missing.map")).code == 66);
  CHECK(cli("verify " + (dir / "a5.map") + " --backend fig8-exact").code == 2);
  CHECK(cli("verify " + (dir / "a5.map") + " --L 0").code == 64);
  slw::write_file(dir / "bad.map", "map bad\nsource\n");
  CHECK(cli("verify " + (dir / "bad.map")).code == 65);

  // --out writes the same bytes, and jobs do not change them
  CHECK(cli("verify " + (dir / "a5.map") + " --k 1 --L 6 --jobs 1 -o " + (dir / "r1.json")).code ==
        0);
  CHECK(cli("verify " + (dir / "a5.map") + " --k 1 --L 6 --jobs 3 -o " + (dir / "r3.json")).code ==
        0);
  CHECK(slw::read_file(dir / "r1.json") == slw::read_file(dir / "r3.json"));
  auto same = cli("report-diff " + (dir / "r1.json") + " " + (dir / "r3.json"));
  CHECK(same.code == 0);
  CHECK(same.out == "identical\n");
  cli("verify " + (dir / "a5.map") + " --k 1 --L 5 -o " + (dir / "r5.json"));
  CHECK(cli("report-diff " + (dir / "r1.json") + " " + (dir / "r5.json")).code == 1);
  auto timed = cli("verify " + (dir / "a5.map") + " --k 0 --L 3 --timing");
  CHECK(timed.code == 0);

  // several subjects check the sequence hypotheses
  std::string seq;
  for (int n = 2; n <= 6; ++n) {
    auto f = dir / ("a" + std::to_string(n) + ".map");
    cli("construct alpha --n " + std::to_string(n) + " -o " + f);
    seq += " " + f;
  }
  CHECK(cli("verify" + seq + " --n-range 2 6 --overlap-threshold 0.5").code == 0);
}

TEST_CASE("loxodromy from the command line") {
  TempDir dir;
  REQUIRE(cli("construct double --n 3 -o " + (dir / "d.map") + " --rep-out " + (dir / "d.json"))
              .code == 0);
  CHECK(cli("verify " + (dir / "d.map") + " --backend loxodromy --rep " + (dir / "d.json") +
            " --k 1 --L 5")
            .code == 0);
  CHECK(cli("verify " + (dir / "d.map") + " --backend loxodromy --k 1 --L 5").code == 2);

  slw::write_file(dir / "para.json",
                  "{\"alphabet\":[\"x\",\"y\"],\"scalar\":\"exact\",\"images\":{"
                  "\"x\":{\"a\":[\"2\",\"0√-3\"],\"b\":[\"0\",\"0√-3\"],\"c\":[\"0\",\"0√-3\"],"
                  "\"d\":[\"1/2\",\"0√-3\"]},"
                  "\"y\":{\"a\":[\"1\",\"0√-3\"],\"b\":[\"1\",\"0√-3\"],\"c\":[\"0\",\"0√-3\"],"
                  "\"d\":[\"1\",\"0√-3\"]}}}");
  slw::write_file(dir / "f2.pres", "group free\ngenerators x y\n");
  auto r = cli("lox-verify " + (dir / "f2.pres") + " --rep " + (dir / "para.json") + " --lox-L 1");
  CHECK(r.code == 1);
  CHECK(r.out.find("\"parabolic\"") != std::string::npos);

  cli("construct extend --base free -o " + (dir / "h.pres"));
  CHECK(cli("lox-verify " + (dir / "h.pres") + " --rep " + (dir / "para.json")).code == 64);
}

TEST_CASE("si and enum") {
  auto a = cli("si --surface 1,1 --word xx");
  CHECK(a.code == 0);
  CHECK(a.out.find("\"si\":1}") != std::string::npos);
  CHECK(cli("si --surface 0,3 --word x").out.find("\"si\":0") != std::string::npos);
  CHECK(cli("si --surface 0,3 --word xX").code == 65);
  CHECK(cli("si --surface 2,0 --word a1b1A1B1a2b2A2B2").code == 65);
  CHECK(cli("si --surface 0,2 --word x").code == 64);
  CHECK(cli("si --surface 1,1 --word q").code == 65);
  auto o = cli("si --surface 1,1 --word xxy --oracle");
  CHECK(o.out.find("\"oracle\":") != std::string::npos);

  auto e = cli("enum --surface 1,1 --k 0 --L 1");
  CHECK(e.code == 0);
  CHECK(e.out.find("\"count\": 2") != std::string::npos);
  CHECK(cli("enum --surface 1,1 --k -1 --L 1").code == 64);
  CHECK(cli("enum --surface 1,1 --k 0 --L 4 --jobs 1").out ==
        cli("enum --surface 1,1 --k 0 --L 4 --jobs 2").out);
}

TEST_CASE("help and version") {
  CHECK(cli("--help").code == 0);
  for (auto const* sub : {"construct", "verify", "lox-verify", "si", "enum", "report-diff"}) {
    auto h = cli(std::string(sub) + " --help");
    CHECK_MESSAGE(h.code == 0, sub);
    CHECK(h.out.find("Usage") != std::string::npos);
  }
  CHECK(cli("--version").out.find(slw::version_string) != std::string::npos);
  CHECK(cli("").code == 64);
}
