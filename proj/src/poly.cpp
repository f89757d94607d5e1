#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace schubert {

namespace {

constexpr Monomial kHighBits = 0x8080808080808080ull;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_same_spec(const Poly& a, const Poly& b, const char* op) {
  if (!(a.spec() == b.spec()))
    throw std::invalid_argument(std::string(op) + ": variable sets differ");
}

}  // namespace

std::string VarSpec::prefix() const {
  switch (kind) {
    case VarKind::TorusY: return "y";
    case VarKind::GenericC: return "c";
    case VarKind::AuxX: return "x";
  }
  return "?";
}

std::string VarSpec::name_of(int var) const {
  return prefix() + std::to_string(var + 1);
}

int mono_exp(Monomial m, int var) { return int((m >> (8 * var)) & 0xff); }

Monomial mono_from_exps(std::span<const int> exps) {
  Monomial m = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 127)
      throw std::invalid_argument("exponent out of range [0,127]");
    m |= Monomial(exps[i]) << (8 * i);
  }
  return m;
}

Monomial mono_mul(Monomial a, Monomial b) {
  Monomial r = a + b;
  if (r & kHighBits) throw std::overflow_error("monomial exponent overflow");
  return r;
}

int mono_total_degree(Monomial m, const VarSpec& spec) {
  int d = 0;
  for (int i = 0; i < spec.count; ++i) d += mono_exp(m, i) * spec.degree_of(i);
  return d;
}

Poly Poly::zero(const VarSpec& spec) { return Poly(spec); }

Poly Poly::constant(const VarSpec& spec, Int c) {
  Poly p(spec);
  if (c != 0) p.terms_.push_back({kMonoOne, std::move(c)});
  return p;
}

Poly Poly::variable(const VarSpec& spec, int var) {
  require(spec.count <= VarSpec::kMaxVars, "variable set too large (max 8)");
  require(var >= 0 && var < spec.count, "variable index out of range");
  Poly p(spec);
  p.terms_.push_back({Monomial(1) << (8 * var), 1});
  return p;
}

Poly Poly::monomial(const VarSpec& spec, Monomial m, Int c) {
  require(spec.count <= VarSpec::kMaxVars, "variable set too large (max 8)");
  for (int i = spec.count; i < VarSpec::kMaxVars; ++i)
    require(mono_exp(m, i) == 0, "monomial uses a variable outside the variable set");
  Poly p(spec);
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, mono_total_degree(t.mono, spec_));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = mono_total_degree(terms_.front().mono, spec_);
  for (const auto& t : terms_)
    if (mono_total_degree(t.mono, spec_) != d) return false;
  return true;
}

Int Poly::constant_term() const { return coeff(kMonoOne); }

Int Poly::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial v) { return t.mono < v; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int Poly::max_exp(int var) const {
  int e = 0;
  for (const auto& t : terms_) e = std::max(e, mono_exp(t.mono, var));
  return e;
}

Poly Poly::operator-() const {
  Poly r(spec_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_spec(*this, o, "add");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->mono < b->mono) {
      merged.push_back(std::move(*a++));
    } else if (b->mono < a->mono) {
      merged.push_back(*b++);
    } else {
      Int c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(terms_.end()));
  merged.insert(merged.end(), b, o.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_spec(a, b, "mul");
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.spec());
  PolyBuilder acc(a.spec());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) acc.add(mono_mul(ta.mono, tb.mono), ta.coeff * tb.coeff);
  return acc.build();
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator*(const Int& c) const {
  if (c == 0) return Poly::zero(spec_);
  Poly r(spec_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

void Poly::add_term(Monomial m, const Int& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial v) { return t.mono < v; });
  if (it != terms_.end() && it->mono == m) {
    it->coeff += c;
    if (it->coeff == 0) terms_.erase(it);
  } else if (c != 0) {
    terms_.insert(it, {m, c});
  }
}

Poly Poly::coeff_of(int var, int d) const {
  Poly r(spec_);
  Monomial strip = ~(Monomial(0xff) << (8 * var));
  PolyBuilder acc(spec_);
  for (const auto& t : terms_)
    if (mono_exp(t.mono, var) == d) acc.add(t.mono & strip, t.coeff);
  return acc.build();
}

Poly Poly::substitute_equal(int a, int b) const {
  require(a != b, "substitute_equal: identical variables");
  PolyBuilder acc(spec_);
  Monomial strip = ~(Monomial(0xff) << (8 * a));
  for (const auto& t : terms_) {
    int ea = mono_exp(t.mono, a);
    Monomial m = t.mono & strip;
    int eb = mono_exp(m, b) + ea;
    if (eb > 127) throw std::overflow_error("monomial exponent overflow");
    m = (m & ~(Monomial(0xff) << (8 * b))) | (Monomial(eb) << (8 * b));
    acc.add(m, t.coeff);
  }
  return acc.build();
}

Poly Poly::set_var_zero(int var) const {
  Poly r(spec_);
  for (const auto& t : terms_)
    if (mono_exp(t.mono, var) == 0) r.terms_.push_back(t);
  return r;
}

Poly Poly::swap_vars(int a, int b) const {
  PolyBuilder acc(spec_);
  for (const auto& t : terms_) {
    int ea = mono_exp(t.mono, a), eb = mono_exp(t.mono, b);
    Monomial m = t.mono & ~(Monomial(0xff) << (8 * a)) & ~(Monomial(0xff) << (8 * b));
    m |= Monomial(eb) << (8 * a);
    m |= Monomial(ea) << (8 * b);
    acc.add(m, t.coeff);
  }
  return acc.build();
}

std::vector<const Poly::Term*> Poly::display_order() const {
  std::vector<const Term*> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(&t);
  std::stable_sort(out.begin(), out.end(), [this](const Term* a, const Term* b) {
    int da = mono_total_degree(a->mono, spec_), db = mono_total_degree(b->mono, spec_);
    if (da != db) return da > db;
    return a->mono > b->mono;
  });
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term* t : display_order()) {
    Int c = t->coeff;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Int a = neg ? Int(-c) : c;
    if (t->mono == kMonoOne) {
      os << a.str();
    } else {
      bool star = false;
      if (a != 1) {
        os << a.str();
        star = true;
      }
      for (int i = 0; i < spec_.count; ++i) {
        int e = mono_exp(t->mono, i);
        if (e == 0) continue;
        if (star) os << "*";
        os << spec_.name_of(i);
        if (e > 1) os << "^" << e;
        star = true;
      }
    }
  }
  return os.str();
}

Poly Poly::parse(const VarSpec& spec, const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    std::string tok = pos < text.size() ? text.substr(pos, 8) : "<end>";
    throw std::invalid_argument("poly parse error: " + what + " at '" + tok + "'");
  };
  auto read_number = [&]() -> Int {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return Int(text.substr(start, pos - start));
  };

  PolyBuilder acc(spec);
  skip_ws();
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    Int coeff = 1;
    Monomial mono = kMonoOne;
    bool more = true;
    while (more) {
      skip_ws();
      if (pos >= text.size()) fail("expected a factor");
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= read_number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string want = spec.prefix();
        if (text.compare(pos, want.size(), want) != 0) fail("unknown variable");
        pos += want.size();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a variable index");
        int idx = std::stoi(text.substr(start, pos - start));
        if (idx < 1 || idx > spec.count) fail("variable index out of range");
        int e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip_ws();
          Int ev = read_number();
          if (ev > 127) fail("exponent too large");
          e = int(ev);
        }
        int cur = mono_exp(mono, idx - 1) + e;
        if (cur > 127) fail("exponent too large");
        mono = (mono & ~(Monomial(0xff) << (8 * (idx - 1)))) | (Monomial(cur) << (8 * (idx - 1)));
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        more = false;
      }
    }
    acc.add(mono, sign * coeff);
    first = false;
    skip_ws();
  }
  if (first) throw std::invalid_argument("poly parse error: empty input");
  return acc.build();
}

void PolyBuilder::add(Monomial m, const Int& c) {
  if (c != 0) terms_.push_back({m, c});
}

void PolyBuilder::add(const Poly& p, const Int& scale) {
  if (scale == 0) return;
  if (!(p.spec() == spec_)) throw std::invalid_argument("PolyBuilder: variable sets differ");
  for (const auto& t : p.terms()) terms_.push_back({t.mono, t.coeff * scale});
}

void PolyBuilder::add_scaled(const Poly& p, Monomial m, const Int& c) {
  if (c == 0) return;
  if (!(p.spec() == spec_)) throw std::invalid_argument("PolyBuilder: variable sets differ");
  for (const auto& t : p.terms()) terms_.push_back({mono_mul(t.mono, m), t.coeff * c});
}

Poly PolyBuilder::build() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.mono < b.mono; });
  Poly out(spec_);
  for (auto& t : terms_) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  terms_.clear();
  return out;
}

Poly pow(const Poly& base, int e) {
  require(e >= 0, "pow: negative exponent");
  Poly r = Poly::constant(base.spec(), 1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Poly complete_h(int m, std::span<const Poly> args, const VarSpec& spec) {
  require(m >= 0, "complete_h: negative degree");
  std::vector<Poly> h(m + 1, Poly::zero(spec));
  h[0] = Poly::constant(spec, 1);
  for (const Poly& v : args) {
    if (!(v.spec() == spec)) throw std::invalid_argument("complete_h: variable sets differ");
    for (int d = 1; d <= m; ++d) h[d] += v * h[d - 1];
  }
  return h[m];
}

Poly elementary_e(int m, std::span<const Poly> args, const VarSpec& spec) {
  require(m >= 0, "elementary_e: negative degree");
  if (m > int(args.size())) return Poly::zero(spec);
  std::vector<Poly> e(m + 1, Poly::zero(spec));
  e[0] = Poly::constant(spec, 1);
  for (const Poly& v : args) {
    if (!(v.spec() == spec)) throw std::invalid_argument("elementary_e: variable sets differ");
    for (int d = m; d >= 1; --d) e[d] += v * e[d - 1];
  }
  return e[m];
}

bool divides(const Poly& d, const Poly& p) {
  if (d.is_zero()) throw std::invalid_argument("divides: zero divisor");
  require_same_spec(d, p, "divides");
  if (p.is_zero()) return true;
  const auto& ts = d.terms();
  auto single_var = [](Monomial m) -> int {
    int var = -1;
    for (int i = 0; i < VarSpec::kMaxVars; ++i) {
      int e = mono_exp(m, i);
      if (e == 1 && var == -1) {
        var = i;
      } else if (e != 0) {
        return -1;
      }
    }
    return var;
  };
  if (ts.size() == 2) {
    int v0 = single_var(ts[0].mono), v1 = single_var(ts[1].mono);
    if (v0 >= 0 && v1 >= 0 && ts[0].coeff + ts[1].coeff == 0 &&
        (ts[0].coeff == 1 || ts[0].coeff == -1)) {
      return p.substitute_equal(v0, v1).is_zero();
    }
  }
  throw std::invalid_argument("divides: divisor must be a difference of two variables");
}

}  // namespace schubert
