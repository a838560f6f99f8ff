/*
   Copyright 2026 The vmhmc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vmhmc/error.hpp"
#include "vmhmc/io.hpp"

using namespace vmhmc;

namespace {

std::vector<SweepRecord> sample_records()
{
    SweepRecord a;
    a.kappa = 0.1;
    a.T = 2.32;
    a.n = 100000;
    a.seed = 18446744073709551615ULL;
    a.ress_sin = 1.0 / 3.0;
    a.tau_sin = 3.0;
    a.ress_cos = 0.25;
    a.tau_cos = 4.0;
    SweepRecord b = a;
    b.kappa = 20.0;
    b.wall_seconds = 0.125;
    return {a, b};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("format_real round-trips")
{
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(-0.0) == "-0");
    for (double v : {kPi, -kPi, 1e-300, 1.0 / 3.0, 123456789.123456789})
        CHECK(std::strtod(format_real(v).c_str(), nullptr) == v);
}

TEST_CASE("sample lines")
{
    std::ostringstream out;
    const std::vector<double> xs{0.5, -kPi, 1e-17};
    write_samples(xs, out);
    CHECK(out.str() == "0.5\n-3.1415926535897931\n1.0000000000000001e-17\n");
}

TEST_CASE("sweep CSV schema")
{
    std::ostringstream out;
    write_sweep_csv(sample_records(), out);
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    CHECK(header == "kappa,T,n,seed,ress_sin,tau_sin,ress_cos,tau_cos,wall_seconds");
    std::getline(in, row);
    CHECK(row == "0.10000000000000001,2.3199999999999998,100000,18446744073709551615,"
                 "0.33333333333333331,3,0.25,4,0");
    std::getline(in, row);
    CHECK(row.rfind("20,", 0) == 0);
    CHECK(row.substr(row.size() - 6) == ",0.125");
    CHECK_FALSE(std::getline(in, row));
}

TEST_CASE("sweep JSON mirrors the CSV")
{
    std::ostringstream out;
    write_sweep_json(sample_records(), out);
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["kappa"].get<double>() == 0.1);
    CHECK(doc[0]["seed"].get<std::uint64_t>() == 18446744073709551615ULL);
    CHECK(doc[1]["wall_seconds"].get<double>() == 0.125);
    CHECK(doc[0].size() == 9);
}

TEST_CASE("file writers")
{
    const auto dir = std::filesystem::temp_directory_path() / "vmhmc_test_io";
    std::filesystem::create_directories(dir);
    const auto path = dir / "sweep.csv";
    write_sweep_csv(sample_records(), path.string());
    std::ostringstream expected;
    write_sweep_csv(sample_records(), expected);
    CHECK(slurp(path) == expected.str());

    CHECK_THROWS_AS(write_samples(std::vector<double>{1.0}, (dir / "missing" / "x.txt").string()),
                    IoError);
    std::filesystem::remove_all(dir);
}
