#include "zkq/parse.hpp"

#include <cctype>

#include "zkq/errors.hpp"

namespace zkq {
namespace {

// Cursor over the input; all reported offsets are 1-based.
struct Cursor {
  const std::string& s;
  std::size_t p = 0;

  bool done() const { return p >= s.size(); }
  char peek() const { return done() ? '\0' : s[p]; }
  std::size_t here() const { return p + 1; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }

  [[noreturn]] void fail_here(const std::string& what) const { throw ParseError(here(), what); }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string read_digits(Cursor& c) {
  if (!is_digit(c.peek())) c.fail_here("expected digit");
  std::string d;
  while (is_digit(c.peek())) d.push_back(c.s[c.p++]);
  return d;
}

// [sign] digits, range-checked into int (used for exponents).
int read_int(Cursor& c) {
  c.skip_ws();
  long long sign = 1;
  if (c.peek() == '+' || c.peek() == '-') {
    if (c.s[c.p] == '-') sign = -1;
    ++c.p;
    c.skip_ws();
  }
  std::size_t at = c.here();
  std::string d = read_digits(c);
  if (d.size() > 9) throw ParseError(at, "exponent out of range");
  return static_cast<int>(sign * std::stoll(d));
}

// Unsigned rational literal: digits ["/" digits]. Signs belong to the
// caller (term and separator signs).
Rational read_unsigned_rational(Cursor& c) {
  std::string num = read_digits(c);
  std::size_t save = c.p;
  c.skip_ws();
  if (c.peek() == '/') {
    ++c.p;
    c.skip_ws();
    std::size_t at = c.here();
    std::string den = read_digits(c);
    if (den.find_first_not_of('0') == std::string::npos)
      throw ParseError(at, "zero denominator");
    return Rational::from_string(num + "/" + den);
  }
  c.p = save;
  return Rational::from_string(num);
}

// One term: optional sign, optional coefficient, z/u factors, optional
// trailing h-power. Exponents of repeated factors accumulate.
struct Term {
  Rational coeff{1};
  int l = 0;
  int i = 0;
  int order = 0;
};

Term read_term(Cursor& c, bool allow_h) {
  Term t;
  c.skip_ws();
  if (c.peek() == '+' || c.peek() == '-') {
    if (c.s[c.p] == '-') t.coeff = -t.coeff;
    ++c.p;
    c.skip_ws();
  }
  bool seen = false;
  if (is_digit(c.peek())) {
    t.coeff *= read_unsigned_rational(c);
    seen = true;
  }
  for (;;) {
    c.skip_ws();
    char f = c.peek();
    if (f != 'z' && f != 'u' && f != 'h') break;
    std::size_t fpos = c.here();
    ++c.p;
    int e = 1;
    std::size_t exp_at = c.here();
    std::size_t save = c.p;
    c.skip_ws();
    if (c.peek() == '^') {
      ++c.p;
      c.skip_ws();
      exp_at = c.here();
      e = read_int(c);
    } else {
      c.p = save;
    }
    seen = true;
    if (f == 'z') {
      t.l += e;
    } else if (f == 'u') {
      if (e < 0) throw ParseError(exp_at, "u-exponent must be nonnegative");
      t.i += e;
    } else {
      if (!allow_h) throw ParseError(fpos, "'h' not allowed here");
      if (e < 0) throw ParseError(exp_at, "h-exponent must be nonnegative");
      t.order = e;
      break;  // nothing may follow the h-power inside a term
    }
  }
  if (!seen) c.fail_here("expected term");
  return t;
}

HbarSeries read_series(const std::string& text, bool allow_h) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail_here("empty expression");
  HbarSeries out;
  bool first = true;
  for (;;) {
    Rational sep(1);
    if (!first) {
      if (c.peek() == '-') sep = Rational(-1);
      else if (c.peek() != '+') c.fail_here("expected '+' or '-'");
      ++c.p;
    }
    Term t = read_term(c, allow_h);
    out.add_coeff(t.order, LaurentPoly::mono(t.l, t.i, sep * t.coeff));
    first = false;
    c.skip_ws();
    if (c.done()) return out;
  }
}

void append_term(std::string& out, const Mono& m, const Rational& c, int order, bool lead) {
  Rational a = c;
  if (lead) {
    if (a.sign() < 0) {
      out += '-';
      a = -a;
    }
  } else {
    out += a.sign() < 0 ? " - " : " + ";
    if (a.sign() < 0) a = -a;
  }
  if ((m.l == 0 && m.i == 0 && order == 0) || a != Rational(1)) out += a.str();
  auto factor = [&out](char v, int e, bool always_exp) {
    if (e == 0 && !always_exp) return;
    if (!out.empty() && out.back() != '-' && out.back() != ' ') out += ' ';
    out += v;
    if (e != 1 || always_exp) {
      out += '^';
      out += std::to_string(e);
    }
  };
  factor('z', m.l, false);
  factor('u', m.i, false);
  if (order > 0) factor('h', order, true);
}

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  return read_series(text, /*allow_h=*/false).classical_limit();
}

HbarSeries parse_series(const std::string& text) { return read_series(text, /*allow_h=*/true); }

Rational parse_rational(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail_here("empty rational");
  Rational sign(1);
  if (c.peek() == '+' || c.peek() == '-') {
    if (c.s[c.p] == '-') sign = Rational(-1);
    ++c.p;
    c.skip_ws();
  }
  Rational r = sign * read_unsigned_rational(c);
  c.skip_ws();
  if (!c.done()) c.fail_here("trailing input after rational");
  return r;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.find_first_not_of(" \t\n\r") == std::string::npos) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    try {
      out.push_back(parse_rational(piece));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "bad rational in list");
    }
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool lead = true;
  for (const auto& [m, c] : p.terms()) {
    append_term(out, m, c, 0, lead);
    lead = false;
  }
  return out;
}

std::string to_string(const HbarSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool lead = true;
  for (int n = 0; n <= s.order(); ++n) {
    for (const auto& [m, c] : s.coeff(n).terms()) {
      append_term(out, m, c, n, lead);
      lead = false;
    }
  }
  return out;
}

}  // namespace zkq
