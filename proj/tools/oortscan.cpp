// oortscan: classify finite groups against the Oort-group necessary
// conditions, drive the labeled corpus, and run the genus computations.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "oortscan/arith.hpp"
#include "oortscan/construct.hpp"
#include "oortscan/error.hpp"
#include "oortscan/group_spec.hpp"
#include "oortscan/oort.hpp"
#include "oortscan/ramification.hpp"
#include "oortscan/report.hpp"

using namespace oortscan;

namespace {

struct Common {
  std::string format = "text";
};

void add_format(CLI::App *cmd, Common &c)
{
  cmd->add_option("--format", c.format, "Output format")
    ->check(CLI::IsMember({"text", "machine"}))
    ->capture_default_str();
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string hex64(std::uint64_t v)
{
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t require_prime(std::uint64_t p)
{
  if (!is_prime(p))
    throw BadParameters("--p must be prime, got " + std::to_string(p));
  return p;
}

std::vector<std::uint64_t> parse_orders(std::string const &text)
{
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw BadParameters("bad filtration entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int emit(Report &r, Common const &c, std::chrono::steady_clock::time_point t0)
{
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (c.format == "machine" ? render_machine(r) : render_text(r));
  return r.exit_code;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Finite-group sieve for Oort and local Oort groups"};
  app.require_subcommand(1);
  Common common;
  Limits const limits = Limits::from_env();

  // classify
  std::string family, file;
  std::uint64_t p = 0;
  auto *classify_cmd = app.add_subcommand("classify", "Classify one group at a prime");
  auto *fam_opt = classify_cmd->add_option("--family", family, "Family spec, e.g. D:18 or sd(C:7,3,pow:2)");
  auto *file_opt = classify_cmd->add_option("--file", file, "Group-spec file (degree line plus cycle generators)");
  fam_opt->excludes(file_opt);
  classify_cmd->add_option("--p", p, "Characteristic")->required();
  add_format(classify_cmd, common);

  // corpus
  std::string profile = "smoke";
  std::vector<std::uint64_t> primes;
  unsigned jobs = 1;
  auto *corpus_cmd = app.add_subcommand("corpus", "Run the labeled corpus");
  corpus_cmd->add_option("--profile", profile, "smoke or full")
    ->check(CLI::IsMember({"smoke", "full"}))
    ->capture_default_str();
  corpus_cmd->add_option("--p", primes, "Restrict to these primes")->delimiter(',');
  corpus_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  add_format(corpus_cmd, common);

  // scenario
  std::string scenario_name;
  std::optional<std::uint64_t> sc_p, sc_l, sc_n;
  auto *scenario_cmd = app.add_subcommand("scenario", "Run a named genus obstruction");
  scenario_cmd->add_option("name", scenario_name, "Scenario name")->required();
  scenario_cmd->add_option("--p", sc_p, "Odd characteristic");
  scenario_cmd->add_option("--l", sc_l, "Auxiliary prime");
  scenario_cmd->add_option("--n-order", sc_n, "Order of N (2 or 4)");
  add_format(scenario_cmd, common);

  // make
  std::string make_family;
  auto *make_cmd = app.add_subcommand("make", "Print the group-spec file of a family");
  make_cmd->add_option("--family", make_family, "Family spec")->required();

  // genus
  auto *genus_cmd = app.add_subcommand("genus", "Riemann-Hurwitz and Artin-Schreier genera");
  genus_cmd->require_subcommand(1);
  std::string cover_file;
  auto *tame_cmd = genus_cmd->add_subcommand("tame", "Tame Riemann-Hurwitz");
  tame_cmd->add_option("--file", cover_file, "Cover spec file")->required();
  add_format(tame_cmd, common);
  auto *wild_cmd = genus_cmd->add_subcommand("wild", "Wild Riemann-Hurwitz with filtrations");
  wild_cmd->add_option("--file", cover_file, "Cover spec file")->required();
  add_format(wild_cmd, common);
  std::uint64_t as_p = 0, as_m = 0;
  auto *as_cmd = genus_cmd->add_subcommand("as", "Genus of w^p - w = f, deg f = m");
  as_cmd->add_option("--p", as_p, "Characteristic")->required();
  as_cmd->add_option("--m", as_m, "Degree of f")->required();
  add_format(as_cmd, common);

  // filtration
  auto *filt_cmd = app.add_subcommand("filtration", "Lower/upper numbering tools");
  filt_cmd->require_subcommand(1);
  std::string orders_text;
  std::uint64_t f_p = 0, sub_order = 0;
  auto *upper_cmd = filt_cmd->add_subcommand("upper", "Upper-numbering jumps of a lower filtration");
  upper_cmd->add_option("--orders", orders_text, "Comma-separated |G_0|,|G_1|,...")->required();
  upper_cmd->add_option("--p", f_p, "Characteristic")->required();
  add_format(upper_cmd, common);
  auto *check_cmd = filt_cmd->add_subcommand("check", "Hasse-Arf divisibility at one level");
  check_cmd->add_option("--orders", orders_text, "Comma-separated |G_0|,|G_1|,...")->required();
  check_cmd->add_option("--p", f_p, "Characteristic")->required();
  check_cmd->add_option("--sub", sub_order, "Subgroup order")->required();
  add_format(check_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto const t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    if (*classify_cmd) {
      require_prime(p);
      r.command = "classify";
      FiniteGroup g;
      std::string id;
      if (!family.empty()) {
        FamilySpec spec = parse_family(family);
        id = spec.str();
        r.inputs = {{"family", id}, {"p", std::to_string(p)}};
        g = build(spec, limits);
      } else if (!file.empty()) {
        std::string text = read_file(file);
        id = file;
        r.inputs = {{"file", file}, {"file_fnv1a64", hex64(fnv1a64(text))}, {"p", std::to_string(p)}};
        g = build_from_spec(parse_group_spec(text), limits);
      } else {
        throw BadParameters("classify needs --family or --file");
      }
      Verdict v = classify(g, p, id, limits);
      r.sections = verdict_sections(v);
      r.exit_code = v.passes() ? 0 : 1;
      return emit(r, common, t0);
    }

    if (*corpus_cmd) {
      Profile prof = parse_profile(profile);
      for (auto q : primes)
        require_prime(q);
      r.command = "corpus";
      r.inputs = {{"profile", profile_name(prof)}};
      if (!primes.empty()) {
        std::string ps;
        for (auto q : primes)
          ps += (ps.empty() ? "" : ",") + std::to_string(q);
        r.inputs.emplace_back("p", ps);
      }
      auto rows = run_corpus(prof, primes, jobs, limits);
      r.sections = corpus_sections(prof, rows);
      bool any_mismatch = std::any_of(rows.begin(), rows.end(),
                                      [](CorpusRow const &x) { return x.status == RowStatus::Mismatch; });
      r.exit_code = any_mismatch ? 1 : 0;
      return emit(r, common, t0);
    }

    if (*scenario_cmd) {
      ScenarioParams params{sc_p, sc_l, sc_n};
      ScenarioReport s = scenario(scenario_name, params);
      r.command = "scenario";
      r.inputs = {{"name", s.name}};
      for (auto const &kv : s.params)
        r.inputs.push_back(kv);
      r.sections = scenario_sections(s);
      r.exit_code = s.obstruction ? 0 : 1;
      return emit(r, common, t0);
    }

    if (*make_cmd) {
      std::cout << "# " << parse_family(make_family).str() << '\n'
                << format_group_spec(realize(parse_family(make_family)));
      return 0;
    }

    if (*genus_cmd) {
      r.command = "genus";
      Section s{"genus", {}};
      if (*as_cmd) {
        r.inputs = {{"kind", "as"}, {"p", std::to_string(as_p)}, {"m", std::to_string(as_m)}};
        s.fields.emplace_back("genus", artin_schreier_genus(as_p, as_m).str());
      } else {
        bool wild = static_cast<bool>(*wild_cmd);
        std::string text = read_file(cover_file);
        CoverSpec cover = parse_cover_spec(text);
        r.inputs = {{"kind", wild ? "wild" : "tame"},
                    {"file", cover_file},
                    {"file_fnv1a64", hex64(fnv1a64(text))}};
        s.fields.emplace_back("group_order", std::to_string(cover.group_order));
        s.fields.emplace_back("base_genus", std::to_string(cover.base_genus));
        s.fields.emplace_back("branch_points", std::to_string(cover.branch.size()));
        for (std::size_t i = 0; i < cover.branch.size(); ++i) {
          auto const &bp = cover.branch[i];
          if (bp.filtration)
            s.fields.emplace_back("point." + std::to_string(i) + ".different",
                                  different_exponent(*bp.filtration).str());
        }
        s.fields.emplace_back("genus", (wild ? wild_rh_genus(cover) : tame_rh_genus(cover)).str());
      }
      r.sections.push_back(std::move(s));
      return emit(r, common, t0);
    }

    if (*filt_cmd) {
      RamificationFiltration f(parse_orders(orders_text), require_prime(f_p));
      r.command = "filtration";
      Section s{"filtration", {{"orders", f.str()}, {"p", std::to_string(f.p())}}};
      if (*upper_cmd) {
        r.inputs = {{"kind", "upper"}, {"orders", f.str()}, {"p", std::to_string(f.p())}};
        std::string lj;
        for (auto j : lower_jumps(f))
          lj += (lj.empty() ? "" : ",") + std::to_string(j);
        s.fields.emplace_back("lower_jumps", lj);
        auto up = lower_to_upper(f);
        for (std::size_t i = 0; i < up.size(); ++i)
          s.fields.emplace_back("upper." + std::to_string(i),
                                to_string(up[i].u) + " -> " + std::to_string(up[i].order_after));
        s.fields.emplace_back("different", different_exponent(f).str());
        s.fields.emplace_back("upper_integral", upper_jumps_integral(f) ? "true" : "false");
      } else {
        r.inputs = {{"kind", "check"},
                    {"orders", f.str()},
                    {"p", std::to_string(f.p())},
                    {"sub", std::to_string(sub_order)}};
        bool ok = hasse_arf_check(f, sub_order);
        s.fields.emplace_back("sub_order", std::to_string(sub_order));
        s.fields.emplace_back("hasse_arf", ok ? "true" : "false");
        s.fields.emplace_back("upper_integral", upper_jumps_integral(f) ? "true" : "false");
        r.exit_code = ok ? 0 : 1;
      }
      r.sections.push_back(std::move(s));
      return emit(r, common, t0);
    }
  } catch (CapExceeded const &e) {
    std::cerr << "error: cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
