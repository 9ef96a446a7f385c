#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = amv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* const kTable1 =
    "k\\n\t1\t2\t3\t4\t5\t6\t7\t8\t9\t10\n"
    "2\t1\t-1\t0\t1\t0\t-3\t0\t17\t0\t-155\n"
    "3\t1\t-2\t1\t4\t-5\t-26\t49\t328\t-809\t-6710\n"
    "4\t1\t-3\t3\t9\t-25\t-99\t427\t2193\t-12465\t-79515\n"
    "5\t1\t-4\t6\t16\t-74\t-264\t1946\t9056\t-88434\t-512024\n"
    "6\t1\t-5\t10\t25\t-170\t-575\t6370\t28225\t-415826\t-2294975\n";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("table") {
  const Result r = run({"table", "--k", "2..6", "--n", "1..10"});
  CHECK(r.code == 0);
  CHECK(r.out == kTable1);

  const Result j = run({"table", "--k", "3..3", "--n", "9..9", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(j.out == "[{\"n\":9,\"h\":1,\"k\":3,\"value\":\"-809\"}]\n");

  CHECK(run({"table", "--k", "6..2", "--n", "1..10"}).code == 2);
  CHECK(run({"table", "--k", "-1..1", "--n", "1..3"}).code == 2);
  CHECK(run({"table", "--k", "2..x", "--n", "1..3"}).code == 2);
  CHECK(run({"table", "--k", "2..3", "--n", "1..3", "--format", "xml"}).code == 2);
}

TEST_CASE("value") {
  CHECK(run({"value", "m", "--n", "8", "--h", "1", "--k", "2"}).out == "17\n");
  CHECK(run({"value", "m", "--n", "5", "--h", "-3", "--k", "-4"}).code == 0);
  CHECK(run({"value", "a", "--n", "10", "--k", "6"}).out == "-2294975\n");
  CHECK(run({"value", "gy", "--n", "3", "--j", "2", "--h", "1", "--k", "1"}).out == "3/2\n");
  CHECK(run({"value", "fox", "--n", "4", "--r", "1", "--s", "2"}).out == "5\n");
  CHECK(run({"value", "m", "--n", "3", "--h", "1", "--k", "0"}).code == 2);
  CHECK(run({"value", "m", "--n", "-3", "--h", "1", "--k", "1"}).code == 2);
  CHECK(run({"value", "gy", "--n", "3", "--j", "0", "--h", "1", "--k", "1"}).code == 2);
  CHECK(run({"value"}).code == 2);
}

TEST_CASE("poly") {
  CHECK(run({"poly", "--n", "5"}).out == "h^5 - 5/2 h^4 k + 5/3 h^3 k^2 - 1/6 h k^4\n");
  CHECK(run({"poly", "--n", "0"}).out == "0\n");
  CHECK(run({"poly", "--n", "6", "--shift-ab"}).out == "1/2 a^4 b^2 + 2 a^3 b^3 + 1/2 a^2 b^4\n");
  CHECK(run({"poly", "--n", "5", "--shift-ab"}).code == 2);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--suite", "prop2", "--max-n", "10"});
  CHECK(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["outcome"] == "pass");
  CHECK(report["theorem"] == "PROP2");

  // output is identical regardless of thread count
  const std::vector<std::string> base{"verify", "--suite", "gy-necessity", "--max-j", "4", "--max-h", "4",
                                      "--max-k", "4"};
  auto with_jobs = base;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  const Result serial = run(base);
  CHECK(serial.code == 0);
  CHECK(run(with_jobs).out == serial.out);
  CHECK(nlohmann::json::parse(serial.out)["witnesses"].size() > 0);

  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "fox", "--jobs", "0"}).code == 2);
}

TEST_CASE("seq") {
  CHECK(run({"seq", "--family", "genocchi", "--n", "1..4"}).out == "1 1\n2 -1\n3 0\n4 1\n");
  CHECK(run({"seq", "--family", "a", "--k", "3", "--n", "8..9"}).out == "8 328\n9 -809\n");
  CHECK(run({"seq", "--family", "fox0", "--n", "0..4"}).out == "0 1\n1 -1\n2 0\n3 2\n4 0\n");
  const Result empty = run({"seq", "--family", "genocchi", "--n", "5..4"});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(run({"seq", "--family", "a", "--n", "1..3"}).code == 2);
  CHECK(run({"seq", "--family", "zeta"}).code == 2);
}

TEST_CASE("help and parse errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

} // TEST_SUITE
