#include "stanley/ideal_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "stanley/error.hpp"

namespace stanley {

namespace {

class Cursor {
public:
  Cursor(std::string_view s, std::size_t line, std::size_t col0)
      : s_(s), line_(line), col0_(col0) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void skip_space() {
    while (!done() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r'))
      ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  std::uint64_t number() {
    skip_space();
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number", start);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc())
      fail("number out of range", start);
    return v;
  }

  [[noreturn]] void fail(const std::string &what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string &what, std::size_t at) const {
    throw ParseError(what, line_, col0_ + at + 1);
  }
  std::size_t pos() const { return pos_; }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
};

Monomial parse_monomial_at(Cursor &c, std::size_t n) {
  std::vector<Exponent> e(n, 0);
  c.skip_space();
  if (c.peek() == '1') {
    std::size_t at = c.pos();
    if (c.number() != 1)
      c.fail("expected '1' or a variable", at);
    c.skip_space();
    if (!c.done())
      c.fail("unexpected trailing input");
    return Monomial(std::move(e));
  }
  do {
    c.skip_space();
    if (c.peek() != 'x')
      c.fail("expected a variable x<i>");
    c.expect('x');
    std::size_t at = c.pos();
    std::uint64_t i = c.number();
    if (i < 1 || i > n)
      c.fail("variable index must lie in 1.." + std::to_string(n), at);
    std::uint64_t p = 1;
    if (c.accept('^')) {
      std::size_t pat = c.pos();
      p = c.number();
      if (p > std::numeric_limits<Exponent>::max() - e[i - 1])
        c.fail("exponent out of range", pat);
    }
    e[i - 1] += static_cast<Exponent>(p);
    c.skip_space();
  } while (c.accept('*'));
  if (!c.done())
    c.fail("unexpected character");
  return Monomial(std::move(e));
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

bool blank(std::string_view s) {
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

} // namespace

Monomial parse_monomial(std::string_view token, std::size_t n) {
  Cursor c(token, 1, 0);
  return parse_monomial_at(c, n);
}

std::string render_monomial(const Monomial &u) {
  if (u.is_unit())
    return "1";
  std::string out;
  for (std::size_t j = 0; j < u.ambient(); ++j) {
    if (u[j] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += 'x' + std::to_string(j + 1);
    if (u[j] > 1)
      out += '^' + std::to_string(u[j]);
  }
  return out;
}

MonomialIdeal parse_ideal_text(std::string_view text, std::size_t *listed) {
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Monomial> gens;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_comment(raw);
    if (blank(line))
      continue;
    Cursor c(line, line_no, 0);
    if (!n) {
      c.expect('n');
      c.expect('=');
      std::size_t at = c.pos();
      std::uint64_t v = c.number();
      if (v < 1 || v > VariableSet::kMaxVariables)
        c.fail("n must lie in 1..64", at);
      c.skip_space();
      if (!c.done())
        c.fail("unexpected trailing input");
      n = static_cast<std::size_t>(v);
      continue;
    }
    gens.push_back(parse_monomial_at(c, *n));
  }
  if (!n)
    throw ParseError("missing header 'n = <int>'", line_no + 1, 1);
  if (listed)
    *listed = gens.size();
  return MonomialIdeal(*n, gens);
}

std::string render_ideal_text(const MonomialIdeal &ideal) {
  std::string out = "n = " + std::to_string(ideal.ambient()) + "\n";
  for (const Monomial &u : ideal.generators())
    out += render_monomial(u) + "\n";
  return out;
}

MonomialIdeal parse_ideal_json(std::string_view text, std::size_t *listed) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
  auto bad = [](const std::string &what) { return ParseError(what, 1, 1); };
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("generators"))
    throw bad("expected an object with keys \"n\" and \"generators\"");
  const auto &jn = doc["n"];
  if (!jn.is_number_unsigned() || jn.get<std::uint64_t>() < 1 ||
      jn.get<std::uint64_t>() > VariableSet::kMaxVariables)
    throw bad("\"n\" must be an integer in 1..64");
  std::size_t n = jn.get<std::size_t>();
  const auto &jg = doc["generators"];
  if (!jg.is_array())
    throw bad("\"generators\" must be an array");
  std::vector<Monomial> gens;
  for (const auto &row : jg) {
    if (!row.is_array() || row.size() != n)
      throw bad("each generator must be an array of n exponents");
    std::vector<Exponent> e;
    for (const auto &x : row) {
      if (!x.is_number_unsigned() ||
          x.get<std::uint64_t>() > std::numeric_limits<Exponent>::max())
        throw bad("exponents must be nonnegative integers");
      e.push_back(x.get<Exponent>());
    }
    gens.emplace_back(std::move(e));
  }
  if (listed)
    *listed = gens.size();
  return MonomialIdeal(n, gens);
}

std::string render_ideal_json(const MonomialIdeal &ideal) {
  nlohmann::ordered_json doc;
  doc["n"] = ideal.ambient();
  doc["generators"] = nlohmann::ordered_json::array();
  for (const Monomial &u : ideal.generators())
    doc["generators"].push_back(
        std::vector<Exponent>(u.exponents().begin(), u.exponents().end()));
  return doc.dump();
}

MonomialIdeal parse_ideal(std::string_view text, std::size_t *listed) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)))
      continue;
    return ch == '{' ? parse_ideal_json(text, listed)
                     : parse_ideal_text(text, listed);
  }
  return parse_ideal_text(text, listed);
}

MonomialIdeal parse_ideal_inline(std::string_view list, std::size_t n,
                                 std::size_t *listed) {
  std::vector<Monomial> gens;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::size_t end = comma == std::string_view::npos ? list.size() : comma;
    std::string_view token = list.substr(start, end - start);
    Cursor c(token, 1, start);
    gens.push_back(parse_monomial_at(c, n));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  if (listed)
    *listed = gens.size();
  return MonomialIdeal(n, gens);
}

} // namespace stanley
