#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
std::string g_source_dir;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = "'" + g_cli + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string spec(const std::string& name) { return "'" + g_source_dir + "/specs/" + name + "'"; }

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("dist prints 12 significant digits") {
    RunResult r = run("dist --space hilbert --body " + spec("disk.json") + " --from 0,0 --to 0.5,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0.549306144334\n");
}

TEST_CASE("dist of a point to itself is zero") {
    RunResult r = run("dist --from 0,0 --to 0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0\n");
}

TEST_CASE("dist outside the body exits 2 with a structured error") {
    RunResult r = run("dist --space hilbert --from 2,0 --to 0,0");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("PointOutside") != std::string::npos);
}

TEST_CASE("midpoint on a disk chord") {
    RunResult r = run("midpoint --space hilbert --from 0,0 --to 0.8,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "0.5,0\n");
}

TEST_CASE("classify output matches the golden bytes") {
    struct Case {
        const char* args;
        const char* golden;
    } cases[] = {
        {"classify --space hilbert --body ", "classify_disk_hilbert.json"},
        {"classify --space hilbert --body ", "classify_ellipse_hilbert.json"},
        {"classify --space hilbert --body ", "classify_projective_disk_hilbert.json"},
        {"classify --space hilbert --body ", "classify_pnorm4_hilbert.json"},
        {"classify --space minkowski --body ", "classify_pnorm4_minkowski.json"},
    };
    const char* bodies[] = {"disk.json", "ellipse2x1.json", "projective_disk.json",
                            "pnorm4.json", "pnorm4.json"};
    for (int i = 0; i < 5; ++i) {
        RunResult r = run(std::string(cases[i].args) + spec(bodies[i]));
        CHECK(r.exit_code == 0);
        CHECK(r.output == read_file(g_source_dir + "/tests/golden/" + cases[i].golden));
    }
}

TEST_CASE("classify is deterministic byte for byte") {
    std::string args = "classify --space hilbert --body " + spec("pnorm4.json") + " --seed 7";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("centers CSV matches the golden bytes") {
    RunResult r = run("centers --space hilbert --grid 5 --body " + spec("ellipse2x1.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_file(g_source_dir + "/tests/golden/centers_ellipse_grid5.csv"));
}

TEST_CASE("centers grid 1 exits 2") {
    RunResult r = run("centers --grid 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("GridTooSmall") != std::string::npos);
}

TEST_CASE("orbit summary lines") {
    RunResult lattice = run("orbit --p 1 --q 1 --lo 0 --hi 10 --iters 50");
    CHECK(lattice.exit_code == 0);
    CHECK(lattice.output.find("max_gap=2\n") != std::string::npos);

    RunResult degenerate = run("orbit --iters 0");
    CHECK(degenerate.output.find("max_gap=10\n") != std::string::npos);
}

TEST_CASE("reflect applies the metric point reflection") {
    std::string pts = g_source_dir + "/build/test_cli_points.csv";
    {
        std::ofstream f(pts);
        f << "0,0\n";
    }
    RunResult r = run("reflect --space hilbert --center 0.5,0 --points '" + pts + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("0,0,0.8,0,0.549306144334,0.549306144334") != std::string::npos);
    std::remove(pts.c_str());
}

TEST_CASE("reflect refuses non-centers with exit 2") {
    std::string pts = g_source_dir + "/build/test_cli_points2.csv";
    {
        std::ofstream f(pts);
        f << "0,0\n";
    }
    RunResult r = run("reflect --space hilbert --body " + spec("pnorm4.json") +
                      " --center 0.3,0.1 --points '" + pts + "'");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("NotAProjectiveCenter") != std::string::npos);
    std::remove(pts.c_str());
}

TEST_CASE("spec and io failures map to exits 3 and 4") {
    CHECK(run("classify --tol fudge=1").exit_code == 3);
    CHECK(run("classify --space euclidean").exit_code == 3);
    CHECK(run("dist --from 0,0 --to 0,0 --body /no/such/file.json").exit_code == 4);

    std::string bad = g_source_dir + "/build/test_cli_bad.json";
    {
        std::ofstream f(bad);
        f << "{\"kind\":\"pnorm\",\"p\":0.5}";
    }
    CHECK(run("classify --body '" + bad + "'").exit_code == 3);
    std::remove(bad.c_str());
}

TEST_CASE("--out writes the same bytes as stdout") {
    std::string out = g_source_dir + "/build/test_cli_out.json";
    RunResult direct = run("classify --space hilbert --body " + spec("disk.json"));
    RunResult filed = run("classify --space hilbert --body " + spec("disk.json") +
                          " --out '" + out + "'");
    CHECK(filed.exit_code == 0);
    CHECK(filed.output.empty());
    CHECK(read_file(out) == direct.output);
    std::remove(out.c_str());
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <pmg-binary> <source-dir>\n");
        return 1;
    }
    g_cli = argv[1];
    g_source_dir = argv[2];
    doctest::Context context;
    return context.run();
}
