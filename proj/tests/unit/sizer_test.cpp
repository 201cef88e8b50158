#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "fixture_support.hpp"
#include "tlev/error.hpp"
#include "tlev/sizer.hpp"

using namespace tlev;
namespace tt = tlev::testing;
using namespace tlev::sizer;
namespace fs = std::filesystem;

namespace {

Lines loc(std::string_view text) { return count_source_lines(text).loc; }

std::map<std::string, Lines> hand_counts() {
  std::map<std::string, Lines> out;
  std::istringstream in(tt::read_file(tt::fixture_dir() / "loc_tree_counts.txt"));
  std::string path;
  Lines n = 0;
  while (in >> path) {
    if (path.starts_with('#')) {
      std::getline(in, path);
      continue;
    }
    in >> n;
    out[path] = n;
  }
  return out;
}

std::string code_lines(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += "f();\n";
  return s;
}

}  // namespace

TEST(CountLines, HandCountedSnippet) {
  EXPECT_EQ(loc("// header\n\nlet x = 1;\n/* a\nb */\nlet y = 2; // tail\n"), 2u);
}

TEST(CountLines, CommentsAndBlanksOnly) {
  EXPECT_EQ(loc("// a\n\n  \t\n/* b\n * c\n */\n"), 0u);
  EXPECT_EQ(loc(""), 0u);
}

TEST(CountLines, StringsShieldCommentMarkers) {
  EXPECT_EQ(loc("let s = \"// not a comment\";"), 1u);
  EXPECT_EQ(loc("let s = '/* no */';\nx();\n"), 2u);
  EXPECT_EQ(loc("let s = `a\n// inside template\n`;\n"), 3u);
  EXPECT_EQ(loc("let s = \"a \\\" // still\";\n"), 1u);
}

TEST(CountLines, BlockCommentsDoNotNest) {
  EXPECT_EQ(loc("/* a /* b */ c();\n"), 1u);
  EXPECT_EQ(loc("/* a /* b */ */\n"), 1u);  // the stray "*/" is code
}

TEST(CountLines, CodeAroundComments) {
  EXPECT_EQ(loc("/* x */ y();\n"), 1u);
  EXPECT_EQ(loc("y(); /* x\n z */\n"), 1u);
  EXPECT_EQ(loc("/* x\n z */ y();\n"), 1u);
}

TEST(CountLines, LongestLine) {
  const std::string long_line(6000, 'a');
  const FileCount c = count_source_lines("x;\n" + long_line + "\n");
  EXPECT_EQ(c.longest_line, 6000u);
  EXPECT_EQ(c.loc, 2u);
}

TEST(TestPaths, Patterns) {
  for (const char* p : {"src/__tests__/util.js", "__test__/a.js", "test/x.js", "a/Tests/b.js", "testing/x.js",
                        "spec/x.js", "lib/test.js", "lib/tests.js", "lib/testing.js", "lib/test-foo.js",
                        "lib/foo-test.js", "lib/foo.spec.js", "lib/TEST.JS", "lib\\test\\x.js"}) {
    EXPECT_TRUE(is_test_path(p)) << p;
  }
  for (const char* p : {"lib/index.js", "lib/latest-run.js", "lib/testament.js", "lib/contest.js",
                        "lib/foo-testing.js", "lib/spec.js", "lib/foo.test.js.map", "spec-helpers/a.js"}) {
    EXPECT_FALSE(is_test_path(p)) << p;
  }
}

TEST(TestPaths, Extensions) {
  EXPECT_TRUE(is_javascript_file("a.js"));
  EXPECT_TRUE(is_javascript_file("a.mjs"));
  EXPECT_TRUE(is_javascript_file("a.cjs"));
  EXPECT_FALSE(is_javascript_file("a.ts"));
  EXPECT_FALSE(is_javascript_file("a.jsx"));
  EXPECT_FALSE(is_javascript_file("a.json"));
}

TEST(LocTree, PerFileHandCounts) {
  const fs::path root = tt::fixture_dir() / "loc_tree";
  auto want = hand_counts();
  const Lines total = want.at("total");
  want.erase("total");

  std::map<std::string, Lines> got;
  for (const auto& rel : list_countable_files(root)) {
    got[rel.generic_string()] = count_source_lines(tt::read_file(root / rel)).loc;
  }
  EXPECT_EQ(got, want);

  const TreeCount tree = count_js_loc(root);
  EXPECT_EQ(tree.loc, total);
  EXPECT_EQ(tree.files_counted, want.size());
}

TEST(LocTree, ShuffledOrderGivesSameTotal) {
  const fs::path root = tt::fixture_dir() / "loc_tree";
  std::vector<fs::path> files = list_countable_files(root);
  const Lines base = count_listed_files(root, files).loc;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(files.begin(), files.end(), rng);
    EXPECT_EQ(count_listed_files(root, files).loc, base);
  }
}

TEST(LocTree, ExclusionSoundness) {
  for (const auto& rel : list_countable_files(tt::fixture_dir() / "loc_tree")) {
    EXPECT_FALSE(is_test_path(rel.generic_string())) << rel;
    for (const auto& seg : rel) EXPECT_NE(seg, "node_modules") << rel;
  }
}

TEST(LocTree, EmptyTreeMonotonicityAndGlobs) {
  tt::TempDir dir("loc");
  EXPECT_EQ(count_js_loc(dir.path()).loc, 0u);
  tt::write_file(dir.path() / "a.js", code_lines(3));
  EXPECT_EQ(count_js_loc(dir.path()).loc, 3u);
  tt::write_file(dir.path() / "dist/b.min.js", "x();\n");
  EXPECT_EQ(count_js_loc(dir.path()).loc, 4u);
  EXPECT_EQ(count_js_loc(dir.path(), {.exclude_globs = {"dist/*"}}).loc, 3u);
  tt::write_file(dir.path() / "node_modules/x/index.js", code_lines(10));
  EXPECT_EQ(count_js_loc(dir.path()).loc, 4u);
}

TEST(LocTree, LongLinesReported) {
  tt::TempDir dir("long");
  tt::write_file(dir.path() / "bundle.js", std::string(5001, 'x') + "\n");
  tt::write_file(dir.path() / "ok.js", std::string(5000, 'x') + "\n");
  const TreeCount c = count_js_loc(dir.path());
  EXPECT_EQ(c.long_line_files, std::vector<std::string>{"bundle.js"});
}

TEST(LocTree, MissingRoot) { EXPECT_THROW(count_js_loc("/nonexistent/tlev-tree"), DataError); }

namespace {

corpus::VersionRecord record(const std::string& name, const std::string& version,
                             std::optional<fs::path> root) {
  corpus::VersionRecord r;
  r.package = name;
  r.version_text = version;
  r.version = semver::parse_version(version);
  r.source_root = std::move(root);
  return r;
}

resolver::ResolvedDependency entry(const corpus::VersionRecord& r, int depth, const std::string& parent = "",
                                   bool duplicate = false) {
  resolver::ResolvedDependency e;
  e.name = r.package;
  e.spec = r.version_text;
  e.resolved = r.version;
  e.resolved_text = r.version_text;
  e.depth = depth;
  e.parent = parent;
  e.duplicate = duplicate;
  e.record = &r;
  return e;
}

}  // namespace

TEST(SizeRelease, Summation) {
  tt::TempDir dir("size");
  tt::write_file(dir.path() / "root/index.js", code_lines(200));
  tt::write_file(dir.path() / "a/index.js", code_lines(300));
  tt::write_file(dir.path() / "b/index.js", code_lines(200));
  tt::write_file(dir.path() / "c/index.js", code_lines(50));
  const auto root = record("root", "1.0.0", dir.path() / "root");
  const auto a = record("a", "1.0.0", dir.path() / "a");
  const auto b = record("b", "1.0.0", dir.path() / "b");
  const auto c = record("c", "1.0.0", dir.path() / "c");
  const auto gap = record("gap", "1.0.0", std::nullopt);

  resolver::DependencySet deps;
  deps.entries = {entry(a, 1), entry(b, 1)};
  SourceSizer sizer;
  const SizeProfile p = size_release(root, deps, sizer);
  EXPECT_EQ(p.l_own, 200u);
  EXPECT_EQ(p.l_dir, 500u);
  EXPECT_EQ(p.l_trans1, 0u);
  EXPECT_TRUE(p.own_sized);

  resolver::ResolvedDependency unresolved;
  unresolved.name = "left-pad";
  unresolved.spec = "^1.0.0";
  unresolved.unresolved = resolver::Unresolved::UnknownPackage;
  deps.entries = {entry(a, 1), entry(b, 1), entry(gap, 1), unresolved,
                  entry(c, 2, "a"), entry(c, 2, "b", true)};
  const SizeProfile q = size_release(root, deps, sizer);
  EXPECT_EQ(q.l_dir, 500u);
  EXPECT_EQ(q.l_trans1, 100u);
  EXPECT_EQ(q.l_trans1_dedup, 50u);
  EXPECT_EQ(q.unresolved, 1u);
  EXPECT_EQ(q.sizing_gaps, std::vector<std::string>{"gap@1.0.0"});
  Lines dir_sum = 0;
  for (const auto& e : deps.entries)
    if (e.depth == 1 && e.record && q.per_dependency.contains({e.name, e.resolved_text}))
      dir_sum += q.per_dependency.at({e.name, e.resolved_text});
  EXPECT_EQ(dir_sum, q.l_dir);

  const SizeProfile none = size_release(root, {}, sizer);
  EXPECT_EQ(none.l_dir, 0u);
  EXPECT_EQ(none.l_trans1, 0u);

  const SizeProfile missing = size_release(gap, {}, sizer);
  EXPECT_FALSE(missing.own_sized);
  EXPECT_EQ(missing.l_own, 0u);
}

TEST(SizeRelease, FixtureOwnSizesMatchOracle) {
  const corpus::Corpus c = corpus::load_corpus(tt::fixture_corpus());
  SourceSizer sizer;
  std::size_t checked = 0;
  for (const auto& item : tt::expected()["loc"]) {
    const std::string pkg = item["package"];
    const std::string ver = item["version"];
    const auto& rec = c.registry.find(pkg)->versions.at(ver);
    const auto count = sizer.size_of(rec);
    if (item["loc"].is_null()) {
      EXPECT_FALSE(count.has_value()) << pkg << "@" << ver;
      continue;
    }
    ASSERT_TRUE(count.has_value()) << pkg << "@" << ver;
    EXPECT_EQ(count->loc, item["loc"].get<Lines>()) << pkg << "@" << ver;
    ++checked;
  }
  EXPECT_GT(checked, 20u);
}
