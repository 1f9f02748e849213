#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "heislab/io.hpp"
#include "heislab/rng.hpp"
#include "heislab/scenarios.hpp"

using namespace heislab;

namespace {

const GridParams g_small{64, 8.0, 4, 32, 32};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("signal round trip is bit exact") {
    TempFile tmp("io_signal_test.bin");
    SampledSignal s = make_random(g_small, 303);
    write_signal(tmp.path, s);
    SampledSignal back = read_signal(tmp.path);
    CHECK(back.L == s.L);
    REQUIRE(back.N() == s.N());
    for (int i = 0; i < s.N(); ++i) CHECK(back.values[i] == s.values[i]);
}

TEST_CASE("field round trip is bit exact") {
    TempFile tmp("io_field_test.hbf1");
    Rng rng(307);
    HeisenbergField F = random_kerp_field(g_small, 1, rng);
    write_field(tmp.path, F);
    HeisenbergField back = read_field(tmp.path);
    CHECK(back.grid.M == F.grid.M);
    CHECK(back.grid.Ny == F.grid.Ny);
    CHECK(back.grid.Nx == F.grid.Nx);
    CHECK(back.grid.N == F.grid.N);
    CHECK(back.grid.L == F.grid.L);
    for (int k = F.kmin(); k <= F.kmax(); ++k)
        for (std::size_t i = 0; i < F.fiber(k).size(); ++i)
            CHECK(back.fiber(k)[i] == F.fiber(k)[i]);
}

TEST_CASE("corrupt files are rejected") {
    TempFile tmp("io_corrupt_test.bin");
    {
        std::ofstream out(tmp.path, std::ios::binary);
        out << "{\"L\": 8.0, \"N\": 64}\n";
        out << "short";
    }
    CHECK_THROWS_AS(read_signal(tmp.path), std::runtime_error);
    CHECK_THROWS_AS(read_signal("no_such_file.bin"), std::runtime_error);

    TempFile tmp2("io_badheader_test.bin");
    {
        std::ofstream out(tmp2.path, std::ios::binary);
        out << "not json\n";
    }
    CHECK_THROWS_AS(read_signal(tmp2.path), std::runtime_error);
}

TEST_CASE("json dump is deterministic with 17 significant digits") {
    json j;
    j["beta"] = 0.1;
    j["alpha"] = json::array({1.0 / 3.0, 2u, true, "text"});
    j["gamma"] = json{{"nested", 1e-300}};
    std::string one = dump_json(j);
    std::string two = dump_json(j);
    CHECK(one == two);
    CHECK(one.find("0.10000000000000001") != std::string::npos);
    CHECK(dump_json(json::array()) == "[]");
    CHECK(dump_json(json::object()) == "{}");
    // keys emitted in sorted order
    CHECK(one.find("\"alpha\"") < one.find("\"beta\""));
    CHECK(one.find("\"beta\"") < one.find("\"gamma\""));

    // %.17g round-trips any double
    Rng rng(311);
    for (int trial = 0; trial < 200; ++trial) {
        double v = (rng.uniform01() - 0.5) * std::pow(10.0, rng.uniform_int(-30, 30));
        json jv = v;
        std::string s = dump_json(jv);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("reports are byte identical across writes") {
    TempFile a("io_report_a.json"), b("io_report_b.json");
    json rep{{"command", "test"}, {"results", {{"value", 1.0 / 7.0}, {"pass", true}}}};
    write_report(a.path, rep);
    write_report(b.path, rep);
    CHECK(slurp(a.path) == slurp(b.path));
    CHECK(slurp(a.path).back() == '\n');
}

TEST_CASE("config parsing") {
    std::map<std::string, std::string> cfg =
        parse_config("# comment\n  N = 128 \npoints=0,0,0;0,0.5,0.25\n\nk=2 # trailing\n");
    CHECK(cfg.at("N") == "128");
    CHECK(cfg.at("points") == "0,0,0;0,0.5,0.25");
    CHECK(cfg.at("k") == "2");

    // emit -> parse round trip
    CHECK(parse_config(config_to_string(cfg)) == cfg);

    CHECK_THROWS_AS(parse_config("key_without_value\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("=value\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_config_file("no_such_config.cfg"), std::invalid_argument);
}

TEST_CASE("edgar csv emission") {
    TempFile tmp("io_edgar_test.csv");
    QuadratureRule rule = gauss_legendre_rule(16);
    write_edgar_csv(tmp.path, 1.0, 0.5, rule);
    std::string text = slurp(tmp.path);
    CHECK(text.rfind("y,x,re,im,abs\n", 0) == 0);
    // 5 x 5 grid plus header
    CHECK(std::count(text.begin(), text.end(), '\n') == 26);
}
