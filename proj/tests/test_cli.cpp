#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <schubert/report.hpp>

using namespace schubert;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SCHUBRIG_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name) {
    std::ifstream f(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Draft-07 subset used by the report schema: type, enum, const, required,
// properties, additionalProperties, items, minItems, maxItems, oneOf, $ref.
class Validator {
public:
    explicit Validator(json root) : root_(std::move(root)) {}

    bool valid(const json& v, std::string& err) const { return check(v, root_, "$", err); }

private:
    json root_;

    static bool has_type(const json& v, const std::string& t) {
        if (t == "null") return v.is_null();
        if (t == "boolean") return v.is_boolean();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        if (t == "string") return v.is_string();
        if (t == "array") return v.is_array();
        if (t == "object") return v.is_object();
        return false;
    }

    bool check(const json& v, const json& s, const std::string& path, std::string& err) const {
        if (s.contains("$ref")) {
            std::string ref = s["$ref"].get<std::string>();
            const std::string prefix = "#/definitions/";
            if (ref.rfind(prefix, 0) != 0) return fail(err, path, "unsupported ref " + ref);
            return check(v, root_["definitions"][ref.substr(prefix.size())], path, err);
        }
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_string())
                ok = has_type(v, s["type"].get<std::string>());
            else
                for (auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
            if (!ok) return fail(err, path, "type " + s["type"].dump() + " vs " + v.dump());
        }
        if (s.contains("const") && v != s["const"]) return fail(err, path, "const");
        if (s.contains("enum")) {
            bool ok = false;
            for (auto& e : s["enum"]) ok = ok || e == v;
            if (!ok) return fail(err, path, "enum " + v.dump());
        }
        if (s.contains("oneOf")) {
            int hits = 0;
            for (auto& alt : s["oneOf"]) {
                std::string e;
                hits += check(v, alt, path, e);
            }
            if (hits != 1) return fail(err, path, "oneOf matched " + std::to_string(hits));
        }
        if (v.is_object()) {
            if (s.contains("required"))
                for (auto& k : s["required"])
                    if (!v.contains(k.get<std::string>())) return fail(err, path, "missing " + k.get<std::string>());
            for (auto& [k, x] : v.items()) {
                if (s.contains("properties") && s["properties"].contains(k)) {
                    if (!check(x, s["properties"][k], path + "." + k, err)) return false;
                } else if (s.value("additionalProperties", true) == false) {
                    return fail(err, path, "unexpected " + k);
                }
            }
        }
        if (v.is_array()) {
            if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) return fail(err, path, "minItems");
            if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) return fail(err, path, "maxItems");
            if (s.contains("items"))
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (!check(v[i], s["items"], path + "[" + std::to_string(i) + "]", err)) return false;
        }
        return true;
    }

    static bool fail(std::string& err, const std::string& path, const std::string& what) {
        err = path + ": " + what;
        return false;
    }
};

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST(Cli, GoldenDiagrams) {
    EXPECT_EQ(run("diagram matrix 'gr(4,10):6,4,2,2'").out, golden("matrix_gr4_10.txt"));
    EXPECT_EQ(run("diagram young 'gr(5,11):6,6,4,2,2'").out, golden("young_gr5_11.txt"));
    EXPECT_EQ(run("diagram blocks 'gr(10,19):9,9,7,7,3,3,3,3,0,0'").out, golden("blocks_gr10_19.txt"));
    EXPECT_EQ(run("diagram hwv 'gr(3,5):2,2,0'").out, golden("hwv_gr3_5.txt"));
}

TEST(Cli, GoldenFilesAreNonTrivial) {
    EXPECT_FALSE(golden("matrix_gr4_10.txt").empty());
    std::string young = golden("young_gr5_11.txt");
    EXPECT_NE(young.find("a* = (4,4,2,0,0)"), std::string::npos);
    EXPECT_NE(young.find("a' = (5,5,3,3,2,2)"), std::string::npos);
    std::string blocks = golden("blocks_gr10_19.txt");
    EXPECT_NE(blocks.find("E widths: 2 2 4 2"), std::string::npos);
    EXPECT_NE(blocks.find("Q heights: 2 4 3"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("analyze 'gr(3,5):2,2,0'").code, 0);
    EXPECT_EQ(run("analyze 'gr(2,4):0,0'").code, 0);
    EXPECT_EQ(run("analyze 'gr(3,5):2,x,0'").code, 1);
    EXPECT_EQ(run("analyze 'gr(3,5):1,2,0'").code, 1);
    EXPECT_EQ(run("analyze").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    EXPECT_EQ(run("analyze 'gr(3,5):2,2,0' --format yaml").code, 1);
    EXPECT_EQ(run("survey 3 5 --jobs 0").code, 1);
    EXPECT_EQ(run("diagram sketch 'gr(3,5):2,2,0'").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ParseErrorReportsPosition) {
    std::string cmd = std::string(SCHUBRIG_PATH) + " analyze 'gr(3,5):2,x,0' 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    ASSERT_NE(p, nullptr);
    char buf[512] = {};
    std::string out;
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    pclose(p);
    EXPECT_NE(out.find("position 10"), std::string::npos) << out;
}

TEST(Cli, AnalyzeReports) {
    auto r = json::parse(run("analyze 'gr(3,5):2,2,0' --format json").out);
    EXPECT_EQ(r["verdict"], "SchurRigid");
    EXPECT_EQ(r["schema_version"], schema_version);
    EXPECT_TRUE(r["exception_boxes"].empty());

    auto s = json::parse(run("analyze 'gr(3,5):2,1,0' --format json").out);
    EXPECT_EQ(s["verdict"], "NotCertified");
    EXPECT_EQ(s["equality"]["verdict"], "ProperInclusion");
    EXPECT_FALSE(s["exception_boxes"].empty());

    auto t = json::parse(run("analyze 'gr(2,4):0,0' --format json").out);
    EXPECT_EQ(t["verdict"], "Trivial");
    EXPECT_EQ(t["trivial_reason"], "whole Grassmannian");
}

TEST(Cli, ReportsValidateAgainstSchema) {
    auto schema = json::parse(run("schema").out);
    EXPECT_EQ(schema["version"], schema_version);
    Validator v(schema);
    std::string err;
    for (const char* part : {"gr(3,5):2,2,0", "gr(3,5):2,1,0", "gr(2,4):0,0", "gr(2,4):2,2", "gr(3,6):3,1,1",
                             "gr(4,8):2,2,0,0"}) {
        auto r = json::parse(run(std::string("analyze '") + part + "' --format json").out);
        EXPECT_TRUE(v.valid(r, err)) << part << ": " << err;
    }
    auto skipped = json::parse(run("analyze 'gr(3,5):2,2,0' --format json --max-wedge-dim 5").out);
    EXPECT_EQ(skipped["verdict"], "Skipped");
    EXPECT_TRUE(v.valid(skipped, err)) << err;

    // a broken report must be rejected
    auto bad = json::parse(run("analyze 'gr(3,5):2,2,0' --format json").out);
    bad["verdict"] = "Rigid";
    EXPECT_FALSE(v.valid(bad, err));
    bad.erase("verdict");
    EXPECT_FALSE(v.valid(bad, err));

    Validator sv(json::parse(run("schema --survey").out));
    auto survey = json::parse(run("survey 3 5 --format json").out);
    ASSERT_TRUE(survey.is_array());
    EXPECT_EQ(survey.size(), 10u);
    EXPECT_TRUE(sv.valid(survey, err)) << err;
}

TEST(Cli, TextCoversJsonFields) {
    for (const char* part : {"gr(3,5):2,2,0", "gr(3,5):2,1,0", "gr(2,4):0,0"}) {
        auto j = json::parse(run(std::string("analyze '") + part + "' --format json").out);
        std::string text = run(std::string("analyze '") + part + "'").out;
        for (auto& [key, val] : j.items()) EXPECT_NE(text.find(key + ":"), std::string::npos) << part << " " << key;
        EXPECT_NE(text.find("verdict: " + j["verdict"].get<std::string>()), std::string::npos);
        for (auto& b : j["exception_boxes"]) EXPECT_NE(text.find(b.dump()), std::string::npos) << b.dump();
        if (!j["equality"].is_null()) {
            EXPECT_NE(text.find(j["equality"]["verdict"].get<std::string>()), std::string::npos);
        }
        if (!j["h11_dim"].is_null()) {
            EXPECT_NE(text.find("h11_dim: " + j["h11_dim"].dump()), std::string::npos);
        }
    }
}

TEST(Cli, SurveyRows) {
    auto s24 = run("survey 2 4");
    EXPECT_EQ(s24.code, 0);
    EXPECT_EQ(count_lines(s24.out), 1 + 6 + 1); // header, rows, totals
    auto s35 = run("survey 3 5");
    EXPECT_EQ(count_lines(s35.out), 1 + 10 + 1);
    std::istringstream is(s35.out);
    bool saw220 = false, saw210 = false;
    for (std::string line; std::getline(is, line);) {
        if (line.rfind("gr(3,5):2,2,0 ", 0) == 0) {
            saw220 = true;
            EXPECT_NE(line.find("Equal"), std::string::npos);
        }
        if (line.rfind("gr(3,5):2,1,0 ", 0) == 0) {
            saw210 = true;
            EXPECT_NE(line.find("ProperInclusion"), std::string::npos);
        }
    }
    EXPECT_TRUE(saw220 && saw210);
    EXPECT_NE(s35.out.find("total 10 rows"), std::string::npos);

    auto only = json::parse(run("survey 3 6 --only-theorem --format json").out);
    EXPECT_EQ(only.size(), 3u);
    for (auto& r : only) EXPECT_EQ(r["theorem_condition"], true);
}

TEST(Cli, SkippedRowsAreKept) {
    auto s = run("survey 3 5 --max-wedge-dim 5");
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(count_lines(s.out), 1 + 10 + 1);
    EXPECT_NE(s.out.find("SKIPPED"), std::string::npos);
}

TEST(Cli, Determinism) {
    auto a = run("survey 3 5 --format json --jobs 4");
    auto b = run("survey 3 5 --format json --jobs 4");
    auto c = run("survey 3 5 --format json --jobs 1");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(run("survey 3 6 --jobs 3").out, run("survey 3 6").out);
}

TEST(Cli, OutFile) {
    std::string path = ::testing::TempDir() + "schubrig_out.txt";
    EXPECT_EQ(run("diagram matrix 'gr(4,10):6,4,2,2' --out " + path).code, 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), golden("matrix_gr4_10.txt"));
}

TEST(Cli, OtherCommands) {
    auto h = json::parse(run("h11 'gr(4,10):6,4,2,2' --format json").out);
    EXPECT_EQ(h["h11_dim"], 10);
    EXPECT_EQ(h["domain_dim"], 170);
    auto e = run("check-equality 'gr(3,5):2,1,0' --format json");
    EXPECT_EQ(e.code, 0);
    auto ej = json::parse(e.out);
    EXPECT_EQ(ej["equality"]["verdict"], "ProperInclusion");
    EXPECT_EQ(ej["consistent"], true);
    auto w = json::parse(run("hwv 'gr(3,5):2,2,0' --format json").out);
    ASSERT_EQ(w["components"].size(), 1u);
    EXPECT_EQ(w["components"][0]["dim"], 6);
    EXPECT_EQ(w["audit"]["ok"], true);
}
