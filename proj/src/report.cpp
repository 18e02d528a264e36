#include "oortscan/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "oortscan/error.hpp"

namespace oortscan {

std::uint64_t fnv1a64(std::string_view data)
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string inputs_digest(Report const &r)
{
  std::string canon = r.command;
  for (auto const &[k, v] : r.inputs) {
    canon += '\n';
    canon += k;
    canon += '=';
    canon += v;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canon)));
  return std::string("fnv1a64:") + buf;
}

namespace {

std::string escape(std::string const &s)
{
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\')
      out += "\\\\";
    else if (c == '\n')
      out += "\\n";
    else
      out += c;
  }
  return out;
}

std::string fmt_ms(double ms)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

} // namespace

std::string render_machine(Report const &r)
{
  std::ostringstream os;
  os << "schema_version=1\n";
  os << "command=" << escape(r.command) << '\n';
  for (auto const &[k, v] : r.inputs)
    os << "input." << k << '=' << escape(v) << '\n';
  os << "inputs_digest=" << inputs_digest(r) << '\n';
  for (auto const &s : r.sections) {
    os << '[' << s.name << "]\n";
    for (auto const &[k, v] : s.fields)
      os << k << '=' << escape(v) << '\n';
  }
  os << "[timing]\n" << "elapsed_ms=" << fmt_ms(r.elapsed_ms) << '\n';
  return os.str();
}

std::string strip_timing(std::string const &out)
{
  auto pos = out.find("[timing]\n");
  if (pos == std::string::npos)
    return out;
  return out.substr(0, pos);
}

std::string render_text(Report const &r)
{
  std::ostringstream os;
  os << r.command;
  for (auto const &[k, v] : r.inputs)
    os << "  " << k << "=" << v;
  os << '\n';

  std::size_t i = 0;
  while (i < r.sections.size()) {
    auto const &s = r.sections[i];
    if (s.name != "row") {
      os << '\n' << s.name << '\n';
      std::size_t w = 0;
      for (auto const &f : s.fields)
        w = std::max(w, f.first.size());
      for (auto const &[k, v] : s.fields)
        os << "  " << k << std::string(w - k.size(), ' ') << "  " << v << '\n';
      ++i;
      continue;
    }

    // a run of rows becomes one table
    std::size_t j = i;
    while (j < r.sections.size() && r.sections[j].name == "row")
      ++j;
    std::vector<std::string> cols;
    for (auto const &f : s.fields)
      cols.push_back(f.first);
    std::vector<std::size_t> width;
    for (auto const &c : cols)
      width.push_back(c.size());
    for (std::size_t k = i; k < j; ++k) {
      auto const &fs = r.sections[k].fields;
      for (std::size_t c = 0; c < cols.size() && c < fs.size(); ++c)
        width[c] = std::max(width[c], fs[c].second.size());
    }
    os << '\n';
    for (std::size_t c = 0; c < cols.size(); ++c)
      os << cols[c] << (c + 1 < cols.size() ? std::string(width[c] - cols[c].size() + 2, ' ') : "");
    os << '\n';
    for (std::size_t k = i; k < j; ++k) {
      auto const &fs = r.sections[k].fields;
      for (std::size_t c = 0; c < cols.size() && c < fs.size(); ++c) {
        os << fs[c].second;
        if (c + 1 < cols.size())
          os << std::string(width[c] - fs[c].second.size() + 2, ' ');
      }
      os << '\n';
    }
    i = j;
  }
  os << "\nelapsed " << fmt_ms(r.elapsed_ms) << " ms\n";
  return os.str();
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(std::vector<std::string> const &xs, char const *sep)
{
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? sep : "") + xs[i];
  return s;
}

std::string details_str(Details const &d)
{
  std::vector<std::string> parts;
  for (auto const &[k, v] : d)
    parts.push_back(k + "=" + v);
  return join(parts, " ");
}

std::string generators_str(Subgroup const &h)
{
  std::vector<std::string> gens;
  for (auto e : h.generators())
    gens.push_back(h.parent().element(e).str());
  return gens.empty() ? "()" : join(gens, " ");
}

} // namespace

std::vector<Section> verdict_sections(Verdict const &v)
{
  std::vector<Section> out;

  Section s{"verdict", {}};
  auto &f = s.fields;
  f.emplace_back("group", v.group_id);
  f.emplace_back("p", std::to_string(v.p));
  f.emplace_back("order", std::to_string(v.order));
  f.emplace_back("shape", v.shape.str());
  std::vector<std::string> al;
  for (auto const &a : v.shape_aliases)
    al.push_back(a.str());
  f.emplace_back("shape_aliases", join(al, ","));
  f.emplace_back("cyclic_by_p", yes_no(v.cyclic_by_p));
  if (v.cyclic_by_p) {
    f.emplace_back("sylow_order", std::to_string(v.sylow_order));
    f.emplace_back("complement_order", std::to_string(v.complement_order));
    f.emplace_back("action_order", std::to_string(v.action_order));
  }
  f.emplace_back("local", status_name(v.local));
  f.emplace_back("local_reason", v.local_reason);
  f.emplace_back("oort_candidate", yes_no(v.oort));
  f.emplace_back("pgl2_char0", yes_no(v.pgl2_char0));
  f.emplace_back("result", v.passes() ? "pass" : "fail");
  out.push_back(std::move(s));

  Section c{"candidate", {}};
  c.fields.emplace_back("pass", yes_no(v.candidate.pass));
  c.fields.emplace_back("subgroups_checked", std::to_string(v.candidate.subgroups_checked));
  c.fields.emplace_back("cyclic_by_p_subgroups", std::to_string(v.candidate.cyclic_by_p_count));
  if (v.candidate.witness) {
    c.fields.emplace_back("witness_order", std::to_string(v.candidate.witness->order()));
    c.fields.emplace_back("witness_shape", v.candidate.witness_shape.str());
    c.fields.emplace_back("witness_generators", generators_str(*v.candidate.witness));
  }
  out.push_back(std::move(c));

  Section q{"forbidden_quotients", {}};
  q.fields.emplace_back("count", std::to_string(v.forbidden_quotients.size()));
  for (std::size_t i = 0; i < v.forbidden_quotients.size(); ++i) {
    auto const &h = v.forbidden_quotients[i];
    std::string d = "type=" + std::to_string(h.type_index) +
                    " quotient_order=" + std::to_string(h.quotient_order) +
                    " kernel_order=" + std::to_string(h.kernel.order());
    if (!h.details.empty())
      d += " " + details_str(h.details);
    q.fields.emplace_back("hit." + std::to_string(i), d);
  }
  out.push_back(std::move(q));

  Section k{"corollaries", {}};
  for (auto const &cc : v.corollaries) {
    k.fields.emplace_back(cc.key, status_name(cc.status));
    if (!cc.detail.empty())
      k.fields.emplace_back(cc.key + ".detail", cc.detail);
  }
  out.push_back(std::move(k));

  if (!v.local_warnings.empty() || !v.caveats.empty()) {
    Section n{"notes", {}};
    for (std::size_t i = 0; i < v.local_warnings.size(); ++i)
      n.fields.emplace_back("warning." + std::to_string(i), v.local_warnings[i]);
    for (std::size_t i = 0; i < v.caveats.size(); ++i)
      n.fields.emplace_back("caveat." + std::to_string(i), v.caveats[i]);
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<Section> scenario_sections(ScenarioReport const &s)
{
  Section head{"scenario", {{"name", s.name}}};
  for (auto const &[k, v] : s.params)
    head.fields.emplace_back("param." + k, v);
  Section vals{"values", s.values};
  Section res{"result", {{"obstruction", s.obstruction ? "true" : "false"}, {"conclusion", s.conclusion}}};
  return {head, vals, res};
}

// ------------------------------------------------------------------ corpus

char const *row_status_name(RowStatus s)
{
  switch (s) {
  case RowStatus::Match: return "MATCH";
  case RowStatus::Mismatch: return "MISMATCH";
  case RowStatus::Skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

bool matches(Expectation const &e, Verdict const &v)
{
  if (e.oort && *e.oort != v.oort)
    return false;
  if (e.local) {
    if (v.local == Status::NotApplicable)
      return false;
    if (*e.local != (v.local == Status::Pass))
      return false;
  }
  return true;
}

std::vector<CorpusRow> run_corpus(Profile profile, std::vector<std::uint64_t> const &primes,
                                  unsigned jobs, Limits const &limits)
{
  auto entries = corpus(profile);
  std::vector<CorpusRow> rows;
  std::vector<std::size_t> entry_of;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (auto const &ex : entries[i].expectations) {
      if (!primes.empty() && std::find(primes.begin(), primes.end(), ex.p) == primes.end())
        continue;
      CorpusRow r;
      r.group = entries[i].spec.str();
      r.p = ex.p;
      r.order = entries[i].order;
      r.expected = ex;
      rows.push_back(std::move(r));
      entry_of.push_back(i);
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < rows.size(); k = next++) {
      CorpusRow &r = rows[k];
      try {
        FiniteGroup g = build(entries[entry_of[k]].spec, limits);
        r.verdict = classify(g, r.p, r.group, limits);
        r.status = matches(r.expected, *r.verdict) ? RowStatus::Match : RowStatus::Mismatch;
      } catch (CapExceeded const &e) {
        r.status = RowStatus::Skipped;
        r.error = e.what();
      }
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1u) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(work);
  }
  return rows;
}

std::vector<Section> corpus_sections(Profile profile, std::vector<CorpusRow> const &rows)
{
  std::vector<Section> out;
  std::size_t match = 0, mismatch = 0, skipped = 0;
  for (auto const &r : rows) {
    Section s{"row", {}};
    s.fields.emplace_back("group", r.group);
    s.fields.emplace_back("p", std::to_string(r.p));
    s.fields.emplace_back("order", std::to_string(r.order));
    if (r.verdict) {
      s.fields.emplace_back("shape", r.verdict->shape.str());
      s.fields.emplace_back("oort", yes_no(r.verdict->oort));
      s.fields.emplace_back("local", status_name(r.verdict->local));
      std::string w = "-";
      if (r.verdict->candidate.witness)
        w = r.verdict->candidate.witness_shape.str();
      s.fields.emplace_back("witness", w);
    } else {
      for (char const *k : {"shape", "oort", "local", "witness"})
        s.fields.emplace_back(k, "-");
    }
    s.fields.emplace_back("expected", r.expected.label());
    s.fields.emplace_back("status", row_status_name(r.status));
    if (!r.error.empty())
      s.fields.emplace_back("error", r.error);
    out.push_back(std::move(s));
    match += r.status == RowStatus::Match;
    mismatch += r.status == RowStatus::Mismatch;
    skipped += r.status == RowStatus::Skipped;
  }
  Section sum{"summary", {}};
  sum.fields.emplace_back("profile", profile_name(profile));
  sum.fields.emplace_back("rows", std::to_string(rows.size()));
  sum.fields.emplace_back("match", std::to_string(match));
  sum.fields.emplace_back("mismatch", std::to_string(mismatch));
  sum.fields.emplace_back("skipped", std::to_string(skipped));
  out.push_back(std::move(sum));
  return out;
}

} // namespace oortscan
