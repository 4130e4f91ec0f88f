#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "apnkit/field.hpp"
#include "apnkit/functions.hpp"
#include "apnkit_cli/app.hpp"
#include "apnkit_cli/golden_tables.hpp"
#include "apnkit_cli/render.hpp"
#include "json.hpp"

using apnkit::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = call(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::string zlabel(int e) { return e == 0 ? "1" : "z^" + std::to_string(e); }

}  // namespace

TEST(Cli, DiffsquareReproducesReferenceTables) {
  const auto mod = call_json({"diffsquare", "--n", "4", "--func", "modinv:0,02"});
  ASSERT_EQ(mod["rows"].size(), 15u);
  EXPECT_EQ(mod["columns"][0], "0");
  EXPECT_EQ(mod["columns"][1], "1");
  EXPECT_EQ(mod["columns"][2], "z^1");
  for (std::size_t i = 0; i < 15; ++i) {
    const auto& row = mod["rows"][i];
    EXPECT_EQ(row["a"], zlabel(static_cast<int>(i)));
    for (std::size_t j = 0; j < 16; ++j) {
      EXPECT_EQ(row["values"][j], zlabel(golden::kModifiedInverse[i][j])) << i << " " << j;
      EXPECT_EQ(row["marked"][j].get<bool>(), golden::kModifiedInverseCircled[i][j]) << i << " " << j;
    }
  }
  const auto inv = call_json({"diffsquare", "--n", "4", "--func", "inverse"});
  int mismatches = 0;
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = 0; j < 16; ++j) mismatches += inv["rows"][i]["values"][j] != zlabel(golden::kInverse[i][j]);
  }
  EXPECT_EQ(mismatches, 1);  // the known bad cell
  EXPECT_EQ(inv["rows"][10]["values"][13], "z^10");
}

TEST(Cli, DiffsquareLinearRowsAreConstant) {
  const auto r = call({"diffsquare", "--n", "2", "--func", "power:1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "a,0,1,z^1,z^2");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "1,1,1,1,1");
  EXPECT_EQ(rows[1], "z^1,z^1,z^1,z^1,z^1");
  EXPECT_EQ(rows[2], "z^2,z^2,z^2,z^2,z^2");
}

TEST(Cli, ReportExamples) {
  const auto inv = call_json({"report", "--n", "4", "--func", "inverse"});
  EXPECT_EQ(inv["delta"], 4);
  EXPECT_EQ(inv["defect"], 135);
  EXPECT_EQ(inv["vf"], 5);
  EXPECT_TRUE(inv["row_spec"].empty());
  EXPECT_TRUE(inv["col_spec"].empty());
  EXPECT_EQ(inv["modulus"], "0x13");

  const auto mod = call_json({"report", "--n", "4", "--func", "modinv:0,02"});
  EXPECT_EQ(mod["delta"], 6);
  EXPECT_EQ(mod["defect"], 113);
  EXPECT_EQ(mod["vf"], 5);
  EXPECT_EQ(mod["row_spec"], json({"z^2", "z^3", "z^5", "z^9"}));
  EXPECT_EQ(mod["col_spec"].size(), 8u);

  const auto g = call_json({"report", "--n", "5", "--func", "gold:1"});
  EXPECT_EQ(g["delta"], 2);
  EXPECT_EQ(g["defect"], 0);
  EXPECT_EQ(g["vf"], 0);
  EXPECT_EQ(g["is_apn"], true);
  EXPECT_EQ(g["quasi_apn"], true);
}

TEST(Cli, DefectSchema) {
  const auto d = call_json({"defect", "--n", "4", "--func", "inverse"});
  const std::vector<std::string> keys = {"n", "function", "d_value", "apn_defect", "ratio", "quasi_apn", "boundary", "rows"};
  std::vector<std::string> got;
  for (auto it = d.begin(); it != d.end(); ++it) got.push_back(it.key());
  // nlohmann::json sorts keys; compare as sets.
  std::sort(got.begin(), got.end());
  auto want = keys;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(d["d_value"], 120);
  EXPECT_EQ(d["apn_defect"], 135);
  EXPECT_EQ(d["ratio"]["num"], 120);
  EXPECT_EQ(d["ratio"]["den"], 255);
  ASSERT_EQ(d["rows"].size(), 15u);
  EXPECT_EQ(d["rows"][0]["a"], "1");
  EXPECT_EQ(d["rows"][0]["s_size"], 12);
  EXPECT_EQ(d["rows"][0]["ks"], json({2}));
  EXPECT_EQ(d["rows"][0]["chi"], 0);
}

TEST(Cli, FieldOrderIsStable) {
  const auto r = call({"report", "--n", "4", "--func", "inverse", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const std::vector<std::string> order = {"\"n\"", "\"modulus\"", "\"function\"", "\"is_permutation\"", "\"delta\"",
                                          "\"spectrum\"", "\"d_value\"", "\"defect\"", "\"ratio\"", "\"quasi_apn\"",
                                          "\"boundary\"", "\"vf\"", "\"row_spec\"", "\"col_spec\"", "\"is_apn\""};
  std::size_t pos = 0;
  for (const auto& k : order) {
    const auto at = r.out.find(k, pos);
    ASSERT_NE(at, std::string::npos) << k;
    pos = at;
  }
}

TEST(Cli, FlatsAndSpectra) {
  const auto fl = call_json({"flats", "--n", "4", "--func", "inverse"});
  EXPECT_EQ(fl["count"], 5);
  EXPECT_EQ(fl["raw_count"], 15);
  ASSERT_EQ(fl["flats"].size(), 5u);
  EXPECT_EQ(fl["flats"][0], json({"0", "1", "z^5", "z^10"}));
  const auto jwr = call_json({"flats", "--n", "4", "--func", "inverse", "--method", "jwr"});
  EXPECT_EQ(jwr["flats"], fl["flats"]);
  const auto streamed = call_json({"flats", "--n", "4", "--func", "inverse", "--stream"});
  EXPECT_EQ(streamed["count"], 5);
  EXPECT_FALSE(streamed.contains("flats"));

  const auto sp = call_json({"spectra", "--n", "5", "--func", "gold:1", "--jwr"});
  EXPECT_EQ(sp["row_spec"].size(), 31u);
  EXPECT_EQ(sp["col_spec"].size(), 32u);
  EXPECT_EQ(sp["is_apn"], true);
  EXPECT_EQ(sp["jwr_violations"], 0);
}

TEST(Cli, DdtOutput) {
  const auto d = call_json({"ddt", "--n", "4", "--func", "inverse"});
  EXPECT_EQ(d["delta"], 4);
  EXPECT_EQ(d["spectrum"], json({{"0", 135}, {"2", 90}, {"4", 15}}));
  ASSERT_EQ(d["rows"].size(), 15u);
  int sum = 0;
  for (const auto& c : d["rows"][3]["counts"]) sum += c.get<int>();
  EXPECT_EQ(sum, 16);

  const auto r = call({"ddt", "--n", "4", "--func", "inverse", "--stream", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  const auto head = json::parse(line);
  EXPECT_EQ(head["spectrum"], d["spectrum"]);
  int rows = 0;
  while (std::getline(in, line)) {
    const auto row = json::parse(line);
    EXPECT_EQ(row["histogram"], json({{"2", 6}, {"4", 1}}));
    ++rows;
  }
  EXPECT_EQ(rows, 15);
}

TEST(Cli, HexLabelsAndModulus) {
  const auto r = call_json({"spectra", "--n", "4", "--func", "modinv:0,02", "--hex"});
  EXPECT_EQ(r["row_spec"], json({"0x4", "0x8", "0x6", "0xa"}));
  const auto other = call_json({"report", "--n", "4", "--modulus", "0x19", "--func", "inverse"});
  EXPECT_EQ(other["modulus"], "0x19");
  EXPECT_EQ(other["defect"], 135);
}

TEST(Cli, DeterministicAcrossJobs) {
  for (const char* cmd : {"report", "flats", "defect", "spectra", "ddt"}) {
    const auto a = call({cmd, "--n", "7", "--func", "modinv:0,3", "--jobs", "1", "--format", "json"});
    const auto b = call({cmd, "--n", "7", "--func", "modinv:0,3", "--jobs", "4", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << cmd;
    const auto c = call({cmd, "--n", "7", "--func", "modinv:0,3", "--jobs", "1", "--format", "json"});
    EXPECT_EQ(a.out, c.out) << cmd;
  }
}

TEST(Cli, TableInputAndOutFile) {
  auto f = apnkit::make_field(4);
  const std::string table = ::testing::TempDir() + "cli_table.txt";
  {
    std::ofstream out(table);
    for (auto v : apnkit::inverse_map(f).canonical_values()) out << std::hex << v << "\n";
  }
  const std::string path = ::testing::TempDir() + "cli_report.json";
  const auto r = call({"report", "--n", "4", "--func", "table:" + table, "--format", "json", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = json::parse(in);
  EXPECT_EQ(doc["defect"], 135);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"ddt", "--func", "inverse"}).code, 2);                     // missing --n
  EXPECT_EQ(call({"ddt", "--n", "1"}).code, 2);                              // out of range
  EXPECT_EQ(call({"ddt", "--n", "4", "--func", "cube"}).code, 2);            // bad DSL
  EXPECT_EQ(call({"ddt", "--n", "4", "--modulus", "0x14"}).code, 2);        // reducible
  EXPECT_EQ(call({"ddt", "--n", "4", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"bogus"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);

  const auto big = call({"ddt", "--n", "13"});
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.err.find("TooLarge"), std::string::npos);
  EXPECT_NE(big.err.find("--stream"), std::string::npos);
  EXPECT_EQ(call({"flats", "--n", "13"}).code, 2);
  EXPECT_EQ(call({"diffsquare", "--n", "13"}).code, 2);

  const auto jwr = call({"flats", "--n", "9", "--method", "jwr"});
  EXPECT_EQ(jwr.code, 2);
  EXPECT_NE(jwr.err.find("--jwr-override"), std::string::npos);
  EXPECT_EQ(call({"spectra", "--n", "9", "--jwr"}).code, 2);
}

TEST(Cli, StreamingAtLargeN) {
  const auto r = call({"flats", "--n", "13", "--func", "inverse", "--stream", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["count"], 0);  // odd n: inverse is APN
}

TEST(Cli, VerifySuites) {
  const auto r = call({"verify", "--suite", "examples"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  [1] row-spectrum"), std::string::npos);

  const auto j = call_json({"verify", "--suite", "identities", "--samples", "10", "--n-max", "5"});
  EXPECT_EQ(j["failed"], 0);
  EXPECT_GT(j["passed"].get<int>(), 5);

  const auto c = call({"verify", "--suite", "examples", "--format", "csv"});
  EXPECT_EQ(c.out.rfind("criterion,tag,instance,expected,measured,verdict\n", 0), 0u);
  EXPECT_EQ(call({"verify", "--suite", "nope"}).code, 2);
}
