#include <gtest/gtest.h>

#include "oortscan/construct.hpp"
#include "oortscan/report.hpp"

using namespace oortscan;

namespace {

std::string field(std::vector<Section> const &secs, std::string const &sec, std::string const &key)
{
  for (auto const &s : secs) {
    if (s.name != sec)
      continue;
    for (auto const &[k, v] : s.fields) {
      if (k == key)
        return v;
    }
  }
  return "<missing>";
}

} // namespace

TEST(Digest, KnownVectors)
{
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  Report r{"classify", {{"family", "D:18"}, {"p", "3"}}, {}, 0.0, 0};
  Report s = r;
  s.inputs[1].second = "2";
  EXPECT_NE(inputs_digest(r), inputs_digest(s));
  EXPECT_EQ(inputs_digest(r).rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(inputs_digest(r).size(), 8u + 16u);
}

TEST(MachineFormat, Layout)
{
  Report r{"demo", {{"x", "1"}}, {{"a", {{"k", "line1\nline2"}, {"path", "c:\\t"}}}}, 1.5, 0};
  std::string out = render_machine(r);
  EXPECT_EQ(out.rfind("schema_version=1\ncommand=demo\ninput.x=1\ninputs_digest=fnv1a64:", 0), 0u);
  EXPECT_NE(out.find("[a]\nk=line1\\nline2\npath=c:\\\\t\n"), std::string::npos);
  EXPECT_NE(out.find("[timing]\nelapsed_ms=1.500\n"), std::string::npos);
  EXPECT_EQ(out.substr(out.size() - std::string("[timing]\nelapsed_ms=1.500\n").size()),
            "[timing]\nelapsed_ms=1.500\n");

  Report slow = r;
  slow.elapsed_ms = 999.0;
  EXPECT_NE(render_machine(r), render_machine(slow));
  EXPECT_EQ(strip_timing(render_machine(r)), strip_timing(render_machine(slow)));
  EXPECT_EQ(strip_timing(render_machine(r)).find("timing"), std::string::npos);
}

TEST(TextFormat, EndsWithElapsed)
{
  Report r{"demo", {}, {{"a", {{"key", "v"}}}}, 2.0, 0};
  std::string out = render_text(r);
  EXPECT_NE(out.find("key"), std::string::npos);
  EXPECT_NE(out.find("elapsed"), std::string::npos);
}

TEST(VerdictSections, Fields)
{
  auto v = classify(build(parse_family("SL23")), 2, "SL23");
  auto secs = verdict_sections(v);
  EXPECT_EQ(field(secs, "verdict", "oort_candidate"), "no");
  EXPECT_EQ(field(secs, "candidate", "witness_shape"), "Q8");
}

TEST(Matching, UnknownExpectationsMatch)
{
  auto v = classify(build(parse_family("A4")), 2);
  Expectation e;
  e.p = 2;
  EXPECT_TRUE(matches(e, v));
  e.oort = true;
  e.local = true;
  EXPECT_TRUE(matches(e, v));
  e.oort = false;
  EXPECT_FALSE(matches(e, v));
}

TEST(Corpus, SmokeLabelsAndOrderIndependentOfJobs)
{
  auto one = run_corpus(Profile::Smoke, {2, 3}, 1);
  auto four = run_corpus(Profile::Smoke, {2, 3}, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].group, four[i].group);
    EXPECT_EQ(one[i].p, four[i].p);
    EXPECT_EQ(one[i].status, four[i].status);
    EXPECT_NE(one[i].status, RowStatus::Mismatch) << one[i].group << " p=" << one[i].p;
  }
  Report a{"corpus", {}, corpus_sections(Profile::Smoke, one), 1.0, 0};
  Report b{"corpus", {}, corpus_sections(Profile::Smoke, four), 2.0, 0};
  EXPECT_EQ(strip_timing(render_machine(a)), strip_timing(render_machine(b)));
}

TEST(Corpus, CapExceededRowsAreSkipped)
{
  Limits l;
  l.max_order = 16;
  auto rows = run_corpus(Profile::Smoke, {2}, 2, l);
  bool any = false;
  for (auto const &r : rows) {
    if (r.order > 16u) {
      EXPECT_EQ(r.status, RowStatus::Skipped) << r.group;
      EXPECT_FALSE(r.error.empty());
      any = true;
    }
  }
  EXPECT_TRUE(any);
}
