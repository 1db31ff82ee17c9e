#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kData = SPUN_TEST_DATA;

struct Run {
    std::string out;
    int code = -1;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SPUN_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ValidateExitCodes) {
    const auto ok = run("validate " + data("figure8.tri"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(has(ok.out, "2 tets, 2 edges (valence 6,6), 1 torus cusp"));
    EXPECT_FALSE(has(ok.out, "violation"));
    EXPECT_TRUE(has(ok.out, "assumed:"));

    const auto low = run("validate " + data("valence2.tri"));
    EXPECT_EQ(low.code, 1);
    EXPECT_TRUE(has(low.out, "violation: edge valence < 3"));
    EXPECT_TRUE(has(run("validate " + data("klein_cusp.tri")).out, "not orientable"));
    EXPECT_TRUE(has(run("validate " + data("sphere_cusp.tri")).out, "sphere link"));

    EXPECT_EQ(run("validate " + data("missing.tri")).code, 2);
    EXPECT_EQ(run("validate " + data("figure8_link.pat")).code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, SurfacesWithOracle) {
    const auto r = run("surfaces " + data("figure8.tri") + " --oracle");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "cusp 0 basis: given"));
    EXPECT_TRUE(has(r.out, "oracle agreement: yes"));
    EXPECT_TRUE(has(r.out, "slope 4,"));
    EXPECT_TRUE(has(r.out, "slope -4,"));
    EXPECT_FALSE(has(r.out, "slope 0,"));
    EXPECT_FALSE(has(r.out, "slope none"));

    const auto s = run("surfaces " + data("figure8_regina.tri") + " --basis synthesized");
    ASSERT_EQ(s.code, 0) << s.out;
    EXPECT_TRUE(has(s.out, "cusp 0 basis: synthesized"));
}

TEST(Cli, NormalizeFinger) {
    const auto r = run("normalize " + data("figure8.tri") + " " + data("figure8_finger.pat") + " --max-steps 10");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "# assumed:"));
    EXPECT_TRUE(has(r.out, "weight 6 -> 4"));
    EXPECT_TRUE(has(r.out, "weight trace: 6 4\n"));
    EXPECT_TRUE(has(r.out, "tet 0 tri 1 1 1 1 quad 0 0 0"));

    const auto link = run("normalize " + data("figure8.tri") + " " + data("figure8_link.pat") + " --max-steps 10");
    EXPECT_EQ(link.code, 0);
    EXPECT_FALSE(has(link.out, "cancel-pair"));
    EXPECT_TRUE(has(link.out, "weight trace: 4\n"));

    const std::string two_moves = ::testing::TempDir() + "finger_and_circle.pat";
    {
        std::ifstream in(data("figure8_finger.pat"));
        std::ofstream out(two_moves);
        out << in.rdbuf() << "circle 0 0 0\n";
    }
    const auto stuck = run("normalize " + data("figure8.tri") + " " + two_moves + " --max-steps 1");
    EXPECT_EQ(stuck.code, 1);
    EXPECT_TRUE(has(stuck.out, "failed: max steps (1) exhausted"));
    EXPECT_EQ(run("normalize " + data("figure8.tri") + " " + two_moves + " --max-steps 2").code, 0);
    EXPECT_EQ(run("normalize " + data("figure8.tri") + " " + two_moves + " --max-steps 0").code, 2);

    const auto bad = run("normalize " + data("figure8.tri") + " " + data("inconsistent.pat") + " --max-steps 10");
    EXPECT_EQ(bad.code, 1);
    EXPECT_TRUE(has(bad.out, "is met 2 times"));
}

TEST(Cli, SpinLevels) {
    const auto zero = run("spin " + data("figure8.tri") + " --cusp 0 --slope 0/0 --levels 3");
    ASSERT_EQ(zero.code, 0) << zero.out;
    EXPECT_TRUE(has(zero.out, "level 3: 0 triangles"));

    const auto r = run("spin " + data("figure8.tri") + " --cusp 0 --slope -4/1 --levels 6");
    ASSERT_EQ(r.code, 0) << r.out;
    std::istringstream in(r.out);
    std::string line;
    long first = -1;
    int levels = 0;
    while (std::getline(in, line)) {
        long level = 0, count = 0;
        if (std::sscanf(line.c_str(), "level %ld: %ld triangles", &level, &count) != 2) continue;
        if (first < 0) first = count;
        EXPECT_EQ(count, first) << line;
        ++levels;
    }
    EXPECT_EQ(levels, 6);
    EXPECT_GT(first, 0);

    EXPECT_EQ(run("spin " + data("sphere_cusp.tri") + " --cusp 0 --slope 1/0 --levels 2").code, 1);
    EXPECT_EQ(run("spin " + data("figure8.tri") + " --cusp 0 --slope banana --levels 2").code, 2);
}

TEST(Cli, DeterministicOutput) {
    for (const std::string args :
         {"surfaces " + data("figure8.tri") + " --oracle",
          "normalize " + data("figure8.tri") + " " + data("figure8_finger.pat") + " --max-steps 10",
          "--format records spin " + data("figure8.tri") + " --cusp 0 --slope 4/1 --levels 4"}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_EQ(a.code, b.code);
    }
}

TEST(Cli, RecordsAreJsonLines) {
    const auto r = run("--format records surfaces " + data("figure8.tri"));
    ASSERT_EQ(r.code, 0) << r.out;
    std::istringstream in(r.out);
    std::string line;
    int solutions = 0;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        ASSERT_TRUE(j.contains("type")) << line;
        if (j["type"] == "solution") {
            ++solutions;
            EXPECT_EQ(j["euler"], "-1");
            EXPECT_EQ(j["quads"].size(), 6u);
        }
    }
    EXPECT_EQ(solutions, 4);
}
