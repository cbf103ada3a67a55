// End-to-end tests of the installed command-line interface. Every example
// here doubles as a golden test of the documented output format.

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef FIBZECK_CLI_PATH
#error "FIBZECK_CLI_PATH must point at the fibzeck binary"
#endif

namespace {

struct RunResult {
  std::string out;
  int exit_code = -1;
};

// Runs a shell command, capturing stdout; stderr is left alone.
RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string cli = FIBZECK_CLI_PATH;

RunResult run_cli(const std::string& args) { return run(cli + " " + args); }

RunResult run_cli_stdin(const std::string& input, const std::string& args) {
  return run("printf '%s' '" + input + "' | " + cli + " " + args);
}

}  // namespace

TEST_CASE("cli: zeck encode / decode") {
  CHECK(run_cli("zeck encode 100").out == "11,6,4\n");
  CHECK(run_cli("zeck decode 11,6,4").out == "100\n");
  CHECK(run_cli("zeck encode 1").out == "2\n");
  CHECK(run_cli("zeck encode 0").exit_code == 2);
  CHECK(run_cli("zeck decode 3,2").exit_code == 2);  // adjacent indices
  CHECK(run_cli("zeck decode bogus").exit_code == 2);
}

TEST_CASE("cli: fib map / unmap / seq") {
  CHECK(run_cli("fib map 100").out == "532\n");
  CHECK(run_cli("fib unmap 532").out == "100\n");
  CHECK(run_cli("fib seq 1 4").out == "1\n2\n4\n5\n");
  CHECK(run_cli("fib map 0").exit_code == 2);
  CHECK(run_cli("fib unmap 3").exit_code == 2);  // not fibbinary
  CHECK(run_cli("--binary fib map 4").out == "101\n");
}

TEST_CASE("cli: odfib nth / rank / seq") {
  CHECK(run_cli("odfib nth 10").out == "69\n");
  CHECK(run_cli("odfib rank 17").out == "4\n");
  CHECK(run_cli("odfib seq 1 3").out == "1\n5\n9\n");
  CHECK(run_cli("odfib rank 4").exit_code == 2);  // even word has no rank
  CHECK(run_cli("--binary odfib nth 10").out == "1000101\n");
}

TEST_CASE("cli: z closed / recursive / seq") {
  CHECK(run_cli("z closed 5").out == "12\n");
  CHECK(run_cli("z recursive 10").out == "25\n");
  CHECK(run_cli("z seq 1 7").out == "1\n4\n6\n9\n12\n14\n17\n");
  CHECK(run_cli("z closed 0").exit_code == 2);
}

TEST_CASE("cli: verify") {
  const RunResult small = run_cli("verify 1");
  CHECK(small.exit_code == 0);
  CHECK(small.out == "verified 1 ranks\n");
  CHECK(run_cli("verify 2000").out == "verified 2000 ranks\n");
  CHECK(run_cli("verify 2000 --shards 4").out == "verified 2000 ranks\n");
  CHECK(run_cli("verify 0").exit_code == 2);
}

TEST_CASE("cli: codec text mode") {
  CHECK(run_cli_stdin("1", "codec encode --text").out == "11\n");
  CHECK(run_cli_stdin("4", "codec encode --text").out == "1011\n");
  CHECK(run_cli_stdin("1011", "codec decode --text").out == "4\n");
  CHECK(run_cli_stdin("4 100 1", "codec encode --text").out ==
        "101100101000011" "11\n");
  CHECK(run_cli_stdin("10111100101000011", "codec decode --text").out ==
        "4\n1\n100\n");
  CHECK(run_cli_stdin("10", "codec decode --text").exit_code == 2);
}

TEST_CASE("cli: codec binary round trip through files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fibzeck_cli_test";
  fs::create_directories(dir);
  const fs::path in = dir / "values.txt";
  const fs::path bin = dir / "stream.bin";
  {
    std::ofstream f(in);
    f << "7 1 340282366920938463463374607431768211455 9001\n";
  }
  const std::string encode =
      cli + " codec encode < " + in.string() + " > " + bin.string();
  CHECK(run(encode).exit_code == 0);
  CHECK(fs::file_size(bin) > 0);
  const RunResult decoded = run(cli + " codec decode < " + bin.string());
  CHECK(decoded.exit_code == 0);
  CHECK(decoded.out == "7\n1\n340282366920938463463374607431768211455\n9001\n");
  fs::remove_all(dir);
}

TEST_CASE("cli: json lines validate and carry the documented schema") {
  const RunResult r = run_cli("--json fib seq 1 12");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rank = 1;
  while (std::getline(lines, line)) {
    const nlohmann::json j = nlohmann::json::parse(line);  // throws if invalid
    REQUIRE(j.is_object());
    CHECK(j.size() == 4);
    CHECK(j.at("rank").is_number_integer());
    CHECK(j.at("rank").get<int>() == rank);
    CHECK(j.at("value").is_string());
    CHECK(j.at("binary").is_string());
    CHECK(j.at("zeckendorf_indices").is_array());
    for (const auto& idx : j.at("zeckendorf_indices"))
      CHECK(idx.is_number_integer());
    // binary is the base-2 rendering of the decimal value for fib rows
    const std::string value = j.at("value").get<std::string>();
    const std::string binary = j.at("binary").get<std::string>();
    CHECK(value.find_first_not_of("0123456789") == std::string::npos);
    CHECK(binary.find_first_not_of("01") == std::string::npos);
    ++rank;
  }
  CHECK(rank == 13);

  // JSON output is uniform across the seq-producing subcommands.
  for (const char* sub : {"odfib", "z"}) {
    const RunResult rr = run_cli(std::string("--json ") + sub + " seq 2 3");
    CHECK(rr.exit_code == 0);
    std::istringstream ls(rr.out);
    int n = 0;
    while (std::getline(ls, line)) {
      const nlohmann::json j = nlohmann::json::parse(line);
      CHECK(j.contains("rank"));
      CHECK(j.contains("value"));
      CHECK(j.contains("binary"));
      CHECK(j.contains("zeckendorf_indices"));
      ++n;
    }
    CHECK(n == 3);
  }
}

TEST_CASE("cli: usage errors and help") {
  CHECK(run_cli("").exit_code == 2);            // missing subcommand
  CHECK(run_cli("frobnicate").exit_code == 2);  // unknown subcommand
  CHECK(run_cli("fib map").exit_code == 2);     // missing argument
  CHECK(run_cli("fib map -5").exit_code == 2);  // not a nonnegative integer
  CHECK(run_cli("fib map abc").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("codec --help").exit_code == 0);
}

TEST_CASE("cli: arbitrarily large inputs") {
  const std::string big = "123456789012345678901234567890123456789";
  const RunResult enc = run_cli("zeck encode " + big);
  CHECK(enc.exit_code == 0);
  // Round trip the comma list back through decode.
  std::string list = enc.out;
  list.pop_back();  // newline
  CHECK(run_cli("zeck decode " + list).out == big + "\n");
}
