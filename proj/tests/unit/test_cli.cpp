#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "kms/enumerator.hpp"
#include "doctest.h"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = kms::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("spectrum of a split star") {
    const auto r = run({"spectrum", "--family", "split-star", "--n", "5", "--k-clique", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "5.372281323\n");
    CHECK(run({"spectrum", "--g6", "Bw"}).out == "2\n");
    CHECK(run({"wiener", "--g6", "Bg"}).out == "4\n");
}

TEST_CASE("parity errors exit 2 with a message") {
    const auto r = run({"check", "--g6", "Bw", "--property", "perfect-k-matching", "--k", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("parity-mismatch") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("check reports a witness") {
    const auto r = run({"check", "--g6", "E}r?", "--property", "perfect-k-matching", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "false witness={0,1}\n");
}

TEST_CASE("verify writes a report and exits 0") {
    const std::string path = "cli_test_report.csv";
    const auto r = run({"verify", "--theorem", "T1", "--n", "6", "--k", "3", "--out", path, "--workers", "2"});
    CHECK(r.code == 0);
    const std::string csv = slurp(path);
    std::remove(path.c_str());
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 113);
    CHECK(std::count(csv.begin(), csv.end(), ',') > 0);
    std::size_t exceptions = 0;
    for (std::size_t pos = 0; (pos = csv.find(",true,false\n", pos)) != std::string::npos; ++pos) ++exceptions;
    CHECK(exceptions == 1);
    CHECK(r.err.find("violations=0") != std::string::npos);
}

TEST_CASE("identical runs give identical reports across worker counts") {
    const auto a = run({"verify", "--theorem", "T4", "--n", "6", "--k", "3", "--format", "json", "--workers", "1"});
    const auto b = run({"verify", "--theorem", "T4", "--n", "6", "--k", "3", "--format", "json", "--workers", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"spectrum"}).code == 2);                                  // no source
    CHECK(run({"spectrum", "--g6", "Bw", "--enum-n", "3"}).code == 2);  // two sources
    CHECK(run({"spectrum", "--g6", "Bw", "--tol", "0"}).code == 2);
    CHECK(run({"spectrum", "--g6", "Bw", "--eps", "-1"}).code == 2);
    CHECK(run({"verify", "--theorem", "T9", "--n", "6"}).code == 2);
    CHECK(run({"verify", "--theorem", "T1", "--n", "7", "--k", "3"}).code == 2);
    CHECK(run({"spectrum", "--g6", "B"}).code == 2);
    CHECK(run({"spectrum", "--family", "octopus", "--n", "5"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("help names the construct") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Distance spectral radius") != std::string::npos);
    const auto d = run({"deficiency", "--help"});
    CHECK(d.code == 0);
    CHECK(d.out.find("k-Berge-Tutte deficiency") != std::string::npos);
}

TEST_CASE("graph sources") {
    CHECK(run({"spectrum", "--file", "-"}, "Bw\nBg\n").out == "graph6,lambda1\nBw,2\nBg,2.732050808\n");
    CHECK(run({"enumerate", "--n", "5", "--count"}).out == "21\n");
    CHECK(run({"deficiency", "--g6", "Cs", "--k", "3"}).out == "6\n");
    const auto b = run({"barriers", "--g6", "Cs", "--k", "3"});
    CHECK(b.out == "{0} size=1 i=3 odd=0\n");
    const auto o = run({"oracle", "--enum-n", "4", "--property", "perfect-k-matching", "--k", "3"});
    CHECK(o.code == 0);
    CHECK(o.out.find("false,false,true") != std::string::npos);
}

TEST_CASE("harness sources from stdin") {
    std::ostringstream graphs;
    for (const auto& g : kms::connected_graphs(5)) graphs << kms::write_graph6(g) << '\n';
    const auto r = run({"verify", "--theorem", "T3", "--n", "5", "--k", "3", "--file", "-"}, graphs.str());
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 22);
    CHECK(run({"verify", "--theorem", "T3", "--n", "7", "--k", "3", "--file", "-"}, graphs.str()).code == 2);
    const auto m = run({"minimize", "--property", "gfc", "--k", "3", "--n", "5", "--file", "-"}, graphs.str());
    CHECK(m.code == 0);
}

TEST_CASE("g6 round trip") {
    const auto r = run({"g6", "--file", "-"}, ">>graph6<<Bw\nBg\r\n");
    CHECK(r.code == 0);
    CHECK(r.out == "Bw\nBg\n");
    CHECK(run({"g6", "--g6", "Bx"}).code == 2);
}

TEST_CASE("sharpness, minimize, lemmas") {
    const auto s = run({"sharpness", "--theorem", "T1", "--n", "8", "--k", "3"});
    CHECK(s.code == 0);
    CHECK(s.out.find("witness={0,1,2}") != std::string::npos);
    const auto m = run({"minimize", "--property", "gbc", "--k", "2", "--n", "6"});
    CHECK(m.code == 0);
    CHECK(m.out.rfind("EF~w 6.16227766", 0) == 0);
    const auto l = run({"lemmas", "--lemma", "L2.8", "--max-n", "12"});
    CHECK(l.code == 0);
    CHECK(l.out.find("failures=0") != std::string::npos);
}
