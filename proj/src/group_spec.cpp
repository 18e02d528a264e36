#include "oortscan/group_spec.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "oortscan/error.hpp"

namespace oortscan {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0u;
  std::size_t line = 1u;

  void skip_space()
  {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r'))
      ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  [[noreturn]] void fail(std::string const &msg) const
  { throw ParseError(msg, line, pos + 1u); }

  std::size_t number()
  {
    std::size_t v = 0u;
    auto res = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (res.ec != std::errc())
      fail("expected a non-negative integer");
    pos = static_cast<std::size_t>(res.ptr - s.data());
    return v;
  }
};

std::string_view strip_comment(std::string_view line)
{
  if (auto h = line.find('#'); h != std::string_view::npos)
    line = line.substr(0u, h);
  return line;
}

bool blank(std::string_view line)
{
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      return false;
  }
  return true;
}

Permutation parse_cycle_line(std::size_t degree, Cursor &cur)
{
  std::vector<std::vector<Point>> cycles;
  cur.skip_space();
  if (cur.done())
    cur.fail("expected a permutation in cycle notation");

  while (true) {
    cur.skip_space();
    if (cur.done())
      break;
    if (cur.peek() != '(')
      cur.fail("expected '('");
    ++cur.pos;

    std::vector<Point> cycle;
    while (true) {
      cur.skip_space();
      if (cur.done())
        cur.fail("unterminated cycle");
      if (cur.peek() == ')') {
        ++cur.pos;
        break;
      }
      if (cur.peek() == ',') {
        ++cur.pos;
        continue;
      }
      std::size_t col = cur.pos;
      std::size_t x = cur.number();
      if (x >= degree) {
        cur.pos = col;
        cur.fail("point " + std::to_string(x) + " out of range for degree " +
                 std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(x));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
  }

  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (BadPermutation const &e) {
    throw ParseError(e.what(), cur.line, 1u);
  }
}

} // namespace

Permutation parse_cycles(std::size_t degree, std::string_view text)
{
  Cursor cur{text};
  return parse_cycle_line(degree, cur);
}

GroupSpec parse_group_spec(std::string_view text)
{
  GroupSpec spec;
  bool have_degree = false;
  std::size_t line_no = 0u;

  std::size_t start = 0u;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = strip_comment(text.substr(start, end - start));
    ++line_no;
    start = end + 1u;

    if (blank(line))
      continue;

    Cursor cur{line, 0u, line_no};
    if (!have_degree) {
      cur.skip_space();
      if (line.substr(cur.pos, 6u) != "degree")
        cur.fail("expected 'degree N' header");
      cur.pos += 6u;
      cur.skip_space();
      if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected degree value");
      spec.degree = cur.number();
      cur.skip_space();
      if (!cur.done())
        cur.fail("trailing characters after degree");
      if (spec.degree < 1u)
        throw ParseError("degree must be positive", line_no, 1u);
      have_degree = true;
      continue;
    }
    spec.generators.push_back(parse_cycle_line(spec.degree, cur));
  }

  if (!have_degree)
    throw ParseError("missing 'degree N' header", line_no == 0u ? 1u : line_no, 1u);
  return spec;
}

std::string format_group_spec(GroupSpec const &spec)
{
  std::ostringstream os;
  os << "degree " << spec.degree << '\n';
  for (auto const &g : spec.generators)
    os << g.str() << '\n';
  return os.str();
}

std::string format_group_spec(FiniteGroup const &g)
{
  return format_group_spec(GroupSpec{g.degree(), g.generator_permutations()});
}

FiniteGroup build_from_spec(GroupSpec const &spec, Limits const &limits)
{
  return generate(spec.degree, spec.generators, limits);
}

} // namespace oortscan
