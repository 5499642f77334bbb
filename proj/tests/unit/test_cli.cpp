#include <doctest.h>

#include <sys/wait.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "riesz/expr/parser.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& exe, const std::string& args) {
  std::string cmd = "'" + exe + "' " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run rieszk(const std::string& args) { return run(RIESZK_PATH, args); }

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("rieszk-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const char* kPwX = R"({"model": "pw", "domain": ["0", "1"], "generators": {"g1": "poly[0, 1]"}})";
const char* kVec = R"({"model": "vector", "generators": {"g1": ["1", "-2", "3/4"], "g2": ["0", "3", "-1"]}})";

}  // namespace

TEST_CASE("eval") {
  std::string pw = write_file("pw.json", kPwX);
  Run r = rieszk("eval 'abs(g1-1/2)' -b " + pw + " --at 1/4");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "1/4");

  std::string vec = write_file("vec.json", kVec);
  Run d = rieszk("eval 'meet(g1,g1) - g1' -b " + vec);
  Run z = rieszk("eval '0' -b " + vec);
  CHECK(d.code == 0);
  CHECK(d.out == z.out);

  Run inline_binding = rieszk("eval 'abs(g1)' --at 1 -b '" + std::string(kVec) + "'");
  CHECK(inline_binding.code == 0);
  CHECK(first_line(inline_binding.out) == "2");
}

TEST_CASE("exit codes for bad input") {
  std::string vec = write_file("vec.json", kVec);
  Run bad = rieszk("eval 'g1 +' -b " + vec);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("offset 4") != std::string::npos);

  CHECK(rieszk("eval 'g7' -b " + vec).code == 3);
  CHECK(rieszk("eval 'g1' -b " + write_file("broken.json", "{\"model\": ")).code == 3);
  CHECK(rieszk("").code == 1);
  CHECK(rieszk("suite nosuch").code == 1);
  CHECK(rieszk("frobnicate").code == 1);
}

TEST_CASE("certify") {
  std::string out = (scratch() / "cert.json").string();
  Run r = rieszk("certify 'abs(g1)' 'abs(g1)' --out " + out);
  CHECK(r.code == 0);
  json cert = json::parse(read_file(out));
  CHECK(riesz::expr::parse_expr(cert.at("rhs_text").get<std::string>()) ==
        riesz::expr::parse_expr("abs(g1*g1)"));

  Run deep = rieszk("certify 'meet(abs(g1 - g2), join(g3, 1/2))' 'abs(abs(g2) - g1*g3) + pos(g1)' --trials 20");
  CHECK(deep.code == 0);

  std::string pw = write_file("pw.json", kPwX);
  CHECK(rieszk("certify 'g1*g1' 'g1' -b " + pw + " --degree-cap 2").code == 5);
  CHECK(rieszk("certify 'abs(g1-g2)' 'g1+g2' -b " + pw).code == 3);
}

TEST_CASE("certificates are byte-identical across runs and recheck") {
  std::string a = (scratch() / "a.json").string();
  std::string b = (scratch() / "b.json").string();
  std::string pw = write_file("pw.json", kPwX);
  CHECK(rieszk("certify 'abs(g1 - 1/3)' 'pos(g1) - 1/5' -b " + pw + " --seed 7 --out " + a).code == 0);
  CHECK(rieszk("certify 'abs(g1 - 1/3)' 'pos(g1) - 1/5' -b " + pw + " --seed 7 --out " + b).code == 0);
  CHECK(read_file(a) == read_file(b));

  CHECK(rieszk("check-cert " + a + " -b " + pw).code == 0);

  json j = json::parse(read_file(a));
  j["rhs_text"] = j["rhs_text"].get<std::string>() + " + 1/1000";
  std::string tampered = write_file("tampered.json", j.dump());
  CHECK(rieszk("check-cert " + tampered).code == 4);
  CHECK(rieszk("check-cert " + write_file("junk.json", "not json")).code == 2);
}

TEST_CASE("closure") {
  auto report = [](const std::string& args) {
    Run r = rieszk("closure " + args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
  };
  std::string one = write_file("one.json", R"({"model": "pw", "domain": ["0", "1"], "generators": {"e": "poly[1]"}})");
  json a = report(one + " --levels 2");
  CHECK(a["saturated"] == true);
  CHECK(a["levels"][1]["dimension"] == 1);

  std::string lin = write_file("lin.json",
                               R"({"model": "pw", "domain": ["0", "1"], "generators": {"e": "poly[1]", "g1": "poly[0, 1]"}})");
  json b = report(lin + " --levels 3 --probes 4");
  REQUIRE(b["levels"].size() == 3);
  CHECK(b["levels"][0]["dimension"] < b["levels"][1]["dimension"]);
  CHECK(b["levels"][1]["dimension"] < b["levels"][2]["dimension"]);

  std::string full = write_file(
      "full.json", R"({"model": "vector", "generators": {"a": [1, 0, 0], "b": [0, 1, 0], "c": [0, 0, 1]}})");
  CHECK(report(full + " --levels 2")["saturated"] == true);
}

TEST_CASE("tensor-check") {
  std::string x = "\"pw{domain=[0,1]; breaks=[0,1]; pieces=[poly[0,1]]}\"";
  std::string one = "\"pw{domain=[0,1]; breaks=[0,1]; pieces=[poly[1]]}\"";
  std::string b = write_file("tensor.json", R"({"model": "tensor", "generators": {"t1": {"x": )" + x + R"(, "y": )" +
                                                one + R"(}, "t2": {"x": )" + one + R"(, "y": )" + x + "}}}");
  CHECK(rieszk("tensor-check 'abs(t1 - t2)' 't1' -b " + b + " --grid 8,8").code == 0);
  Run ev = rieszk("eval 't1 + t2' -b " + b + " --at 1/2,1/3");
  CHECK(ev.code == 0);
  CHECK(first_line(ev.out) == "5/6");
}

TEST_CASE("suites and the negative control") {
  Run ok = rieszk("suite l1");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("l1: 2150/2150 ok") != std::string::npos);

  Run bad = run(RIESZK_FAULTY_PATH, "suite l1");
  CHECK(bad.code == 4);
  CHECK(bad.out.find("counterexample l1-pospos") != std::string::npos);
}
