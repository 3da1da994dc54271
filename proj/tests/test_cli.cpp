#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "bulab/io.hpp"
#include "cli.hpp"

using namespace bulab;
using bulab::cli::run_cli;

namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Outcome r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string fx(const std::string& name) { return std::string(BULAB_FIXTURE_DIR) + "/" + name; }

class TempDir {
public:
    explicit TempDir(const std::string& tag)
        : path_(fs::temp_directory_path() / ("bulab_cli_" + tag + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())))
    {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::vector<std::string> fig2_shashkin()
{
    return {"verify", "shashkin", "--complex", fx("fig2.cx"), "--boundary-involution", fx("fig2.inv"),
            "--labelling", fx("fig2.lab")};
}

} // namespace

TEST(Cli, Fig2ShashkinText)
{
    const Outcome r = run(fig2_shashkin());
    EXPECT_EQ(r.code, cli::kVerified) << r.err;
    EXPECT_NE(r.out.find("count     1,2,3 = 3\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("count     1,-2,3 = 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("count     1,2,-3 = 3\n"), std::string::npos);
    EXPECT_NE(r.out.find("count     1,-2,-3 = 3\n"), std::string::npos);
    EXPECT_NE(r.out.find("(exit 0)"), std::string::npos);
    EXPECT_EQ(r.out.find("elapsed"), std::string::npos);
}

TEST(Cli, JsonAndTextAgree)
{
    const Outcome text = run(fig2_shashkin());
    auto args = fig2_shashkin();
    args.insert(args.begin(), "--json");
    const Outcome js = run(args);
    ASSERT_EQ(js.code, cli::kVerified);
    const auto doc = nlohmann::json::parse(js.out);
    EXPECT_EQ(doc["command"], "verify shashkin");
    EXPECT_EQ(doc["exit_code"], 0);
    ASSERT_EQ(doc["counts"].size(), 4u);
    for (const auto& row : doc["counts"]) {
        const std::string line = "count     " + row["key"].get<std::string>() + " = " +
                                 std::to_string(row["count"].get<long long>()) + "\n";
        EXPECT_NE(text.out.find(line), std::string::npos) << line;
    }
    for (const auto& input : doc["inputs"])
        EXPECT_NE(text.out.find("fnv1a:" + input["fnv1a"].get<std::string>()), std::string::npos);
    EXPECT_FALSE(doc.contains("elapsed_ms"));
}

TEST(Cli, OutputIsDeterministic)
{
    EXPECT_EQ(run(fig2_shashkin()).out, run(fig2_shashkin()).out);
    auto timed = fig2_shashkin();
    timed.insert(timed.begin(), "--timing");
    EXPECT_NE(run(timed).out.find("elapsed"), std::string::npos);
}

TEST(Cli, TuckerFindsComplementaryEdge)
{
    TempDir dir("tucker");
    ASSERT_EQ(run({"gen", "crosspolytope", "--dim", "2", "--out", dir / "oct"}).code, 0);
    write_text_file(dir / "two.lab", "+1 1\n-1 -1\n+2 2\n-2 -2\n+3 1\n-3 -1\n");
    const Outcome r = run({"verify", "tucker", "--complex", dir / "oct.cx", "--involution", dir / "oct.inv",
                           "--labelling", dir / "two.lab"});
    EXPECT_EQ(r.code, cli::kVerified) << r.err;
    EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, TuckerOnWrongAlphabetIsInputError)
{
    TempDir dir("tucker3");
    ASSERT_EQ(run({"gen", "crosspolytope", "--dim", "2", "--out", dir / "oct"}).code, 0);
    const Outcome r = run({"verify", "tucker", "--complex", dir / "oct.cx", "--involution", dir / "oct.inv", "--labelling",
                       dir / "oct.lab"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("error: "), std::string::npos);
}

TEST(Cli, MalformedFileIsInputError)
{
    TempDir dir("bad");
    write_text_file(dir / "bad.lab", "x0y0 2\nx0y1 zz\n");
    const Outcome r = run({"verify", "shashkin", "--complex", fx("fig2.cx"), "--boundary-involution", fx("fig2.inv"),
                       "--labelling", dir / "bad.lab"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("bad.lab:2:"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, cli::kInputError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
    EXPECT_EQ(run({"verify", "shashkin", "--complex", fx("fig2.cx")}).code, cli::kInputError);
    EXPECT_EQ(run({"--help"}).code, cli::kVerified);
    EXPECT_EQ(run({"verify", "tucker", "--complex", fx("fig2.cx"), "--labelling", fx("fig2.lab")}).code,
              cli::kInputError);
}

TEST(Cli, GenFig2ReproducesFixtures)
{
    TempDir dir("gen");
    const Outcome r = run({"gen", "fig2", "--out", dir / "fig2"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* ext : {".cx", ".inv", ".lab", ".lay"})
        EXPECT_EQ(read_text_file(dir / (std::string("fig2") + ext)), read_text_file(fx(std::string("fig2") + ext))) << ext;
}

TEST(Cli, GenRefinedOctahedronReproducesFixture)
{
    TempDir dir("sd");
    ASSERT_EQ(run({"--refine", "1", "gen", "crosspolytope", "--dim", "2", "--out", dir / "sd"}).code, 0);
    EXPECT_EQ(read_text_file(dir / "sd.cx"), read_text_file(fx("sd_octahedron.cx")));
    EXPECT_EQ(read_text_file(dir / "sd.inv"), read_text_file(fx("sd_octahedron.inv")));
    EXPECT_EQ(read_text_file(dir / "sd.lay"), read_text_file(fx("sd_octahedron.lay")));
}

TEST(Cli, Genus2FreeLabelsVerify)
{
    TempDir dir("g2");
    ASSERT_EQ(run({"--seed", "5", "gen", "genus2", "--free-labels", "3", "--out", dir / "g2"}).code, 0);
    const Outcome s = run({"verify", "shashkin", "--complex", dir / "g2.cx", "--involution", dir / "g2.inv", "--labelling",
                       dir / "g2.lab"});
    EXPECT_EQ(s.code, cli::kVerified) << s.out << s.err;
    EXPECT_NE(s.out.find("all_odd = true"), std::string::npos);
    const Outcome k = run({"verify", "kyfan", "--complex", dir / "g2.cx", "--involution", dir / "g2.inv", "--labelling",
                       dir / "g2.lab"});
    EXPECT_EQ(k.code, cli::kVerified) << k.out << k.err;
}

TEST(Cli, DoubleNeedsFullBoundary)
{
    TempDir dir("double");
    const Outcome plain = run({"double", "--complex", fx("fig2.cx"), "--boundary-involution", fx("fig2.inv"), "--out",
                           dir / "d"});
    EXPECT_EQ(plain.code, cli::kInputError);
    EXPECT_NE(plain.err.find("BoundaryNotFull"), std::string::npos);
    const Outcome full = run({"double", "--complex", fx("fig2.cx"), "--boundary-involution", fx("fig2.inv"), "--labelling",
                          fx("fig2.lab"), "--make-full", "--out", dir / "d"});
    ASSERT_EQ(full.code, 0) << full.err;
    const Outcome closed = run({"verify", "shashkin", "--complex", dir / "d.cx", "--involution", dir / "d.inv",
                            "--labelling", dir / "d.lab"});
    EXPECT_EQ(closed.code, cli::kVerified) << closed.out << closed.err;
    EXPECT_NE(closed.out.find("count     1,2,3 = 3\n"), std::string::npos) << closed.out;
}

TEST(Cli, CoverFanWitness)
{
    for (int k = 1; k <= 3; ++k) {
        const Outcome r = run({"verify", "cover", "--complex", fx("sd_octahedron.cx"), "--involution",
                           fx("sd_octahedron.inv"), "--cover", fx("tetra4.cover"), "--k", std::to_string(k)});
        EXPECT_EQ(r.code, cli::kVerified) << r.out << r.err;
        EXPECT_NE(r.out.find("witness"), std::string::npos);
    }
}

TEST(Cli, LsRejectsTooManySets)
{
    const Outcome r = run({"verify", "ls", "--complex", fx("sd_octahedron.cx"), "--involution", fx("sd_octahedron.inv"),
                       "--cover", fx("tetra4.cover")});
    EXPECT_EQ(r.code, cli::kInputError);
}

TEST(Cli, CountAndDegree)
{
    const Outcome c = run({"count", "--complex", fx("fig2.cx"), "--labelling", fx("fig2.lab"), "--signature", "1,-2,3"});
    EXPECT_EQ(c.code, 0) << c.err;
    TempDir dir("deg");
    write_text_file(dir / "s.cx", "dim 1\ns0 s1\ns1 s2\ns2 s3\ns3 s4\ns4 s5\ns5 s0\n");
    write_text_file(dir / "t.cx", "dim 1\nt0 t1\nt1 t2\nt2 t0\n");
    write_text_file(dir / "f.map", "s0 t0\ns1 t1\ns2 t2\ns3 t0\ns4 t1\ns5 t2\n");
    const Outcome d = run({"--json", "degree", "--source", dir / "s.cx", "--target", dir / "t.cx", "--map", dir / "f.map"});
    ASSERT_EQ(d.code, 0) << d.err;
    const auto doc = nlohmann::json::parse(d.out);
    EXPECT_EQ(doc["facts"]["degree_mod2"], 0);
}

TEST(Cli, RenderWritesSvg)
{
    TempDir dir("svg");
    const Outcome r = run({"render", "--complex", fx("fig2.cx"), "--labelling", fx("fig2.lab"), "--layout", fx("fig2.lay"),
                       "--out", dir / "f.svg"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_text_file(dir / "f.svg").rfind("<svg", 0), 0u);
}

TEST(Cli, Fnv1a)
{
    EXPECT_EQ(cli::fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(cli::fnv1a_hex("a"), "af63dc4c8601ec8c");
}
