#include "adiag/expr.hpp"

#include <cctype>
#include <numeric>

#include "adiag/error.hpp"

namespace adiag {

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw UsageError("expected '" + std::string(1, c) + "' at position " +
                       std::to_string(pos) + " in \"" + s + "\"");
  }
  // 'x' or the UTF-8 multiplication sign
  bool consume_times() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      return true;
    }
    if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xC3 &&
        static_cast<unsigned char>(s[pos + 1]) == 0x97) {
      pos += 2;
      return true;
    }
    return false;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }
  bool peek_digit() {
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  long long integer() {
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (!peek_digit())
      throw UsageError("expected integer at position " + std::to_string(pos) + " in \"" +
                       s + "\"");
    long long v = 0;
    while (peek_digit()) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000000LL) throw UsageError("integer literal too large in \"" + s + "\"");
      ++pos;
    }
    return neg ? -v : v;
  }
};

GroupExpr parse_sum(Scanner& sc);

GroupExpr make_atom(const std::string& name, Scanner& sc) {
  GroupExpr e;
  e.kind = GroupExpr::Kind::Atom;
  if (name == "Q") {
    long long p = sc.integer();
    if (p != 8) throw UsageError("unknown group atom Q" + std::to_string(p));
    e.atom = "Q8";
    return e;
  }
  if (name != "C" && name != "D" && name != "Dic" && name != "S" && name != "A" &&
      name != "Heis")
    throw UsageError("unknown group atom \"" + name + "\"");
  long long p = sc.integer();
  if (p < 1) throw UsageError(name + ": parameter must be positive");
  if ((name == "S" || name == "A") && p > 12)
    throw UsageError(name + ": degree capped at 12");
  if (p > 6000) throw UsageError(name + ": parameter too large");
  e.atom = name;
  e.param = static_cast<int>(p);
  return e;
}

ActionSpec parse_action(Scanner& sc) {
  std::string w = sc.word();
  ActionSpec a;
  if (w == "inv") {
    a.kind = ActionSpec::Kind::Inv;
  } else if (w == "shift") {
    a.kind = ActionSpec::Kind::Shift;
  } else if (w == "pow") {
    sc.expect(':');
    a.kind = ActionSpec::Kind::Pow;
    a.k = sc.integer();
  } else {
    throw UsageError("unknown action \"" + w + "\" (want inv, shift or pow:k)");
  }
  return a;
}

GroupExpr parse_term(Scanner& sc) {
  if (sc.peek() == '(') {
    sc.expect('(');
    GroupExpr inner = parse_sum(sc);
    sc.expect(')');
    return inner;
  }
  std::string w = sc.word();
  if (w.empty())
    throw UsageError("expected group term at position " + std::to_string(sc.pos) +
                     " in \"" + sc.s + "\"");
  if (w == "sd") {
    sc.expect('(');
    GroupExpr e;
    e.kind = GroupExpr::Kind::Semidirect;
    e.children.push_back(parse_sum(sc));
    sc.expect(',');
    std::string c = sc.word();
    if (c != "C") throw UsageError("semidirect complement must be cyclic (\"C<n>\")");
    long long m = sc.integer();
    if (m < 1) throw UsageError("semidirect complement order must be positive");
    if (m > 6000) throw UsageError("semidirect complement order too large");
    e.cyclic_order = static_cast<int>(m);
    sc.expect(',');
    e.action = parse_action(sc);
    sc.expect(')');
    return e;
  }
  return make_atom(w, sc);
}

GroupExpr parse_sum(Scanner& sc) {
  GroupExpr first = parse_term(sc);
  if (!sc.consume_times()) return first;
  GroupExpr prod;
  prod.kind = GroupExpr::Kind::Product;
  auto append = [&prod](GroupExpr&& e) {
    if (e.kind == GroupExpr::Kind::Product)
      for (auto& c : e.children) prod.children.push_back(std::move(c));
    else
      prod.children.push_back(std::move(e));
  };
  append(std::move(first));
  do {
    append(parse_term(sc));
  } while (sc.consume_times());
  return prod;
}

}  // namespace

GroupExpr parse_expr(const std::string& text) {
  Scanner sc{text};
  GroupExpr e = parse_sum(sc);
  if (!sc.eof())
    throw UsageError("trailing input at position " + std::to_string(sc.pos) + " in \"" +
                     text + "\"");
  return e;
}

std::string print_expr(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Atom:
      return e.atom == "Q8" ? e.atom : e.atom + std::to_string(e.param);
    case GroupExpr::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += "x";
        out += print_expr(e.children[i]);
      }
      return out;
    }
    case GroupExpr::Kind::Semidirect: {
      std::string a;
      switch (e.action.kind) {
        case ActionSpec::Kind::Inv: a = "inv"; break;
        case ActionSpec::Kind::Shift: a = "shift"; break;
        case ActionSpec::Kind::Pow: a = "pow:" + std::to_string(e.action.k); break;
      }
      return "sd(" + print_expr(e.children[0]) + ",C" + std::to_string(e.cyclic_order) +
             "," + a + ")";
    }
  }
  throw ComputeError("unreachable expression kind");
}

long long nominal_order(const GroupExpr& e) {
  constexpr long long kCap = 1000000000000LL;
  switch (e.kind) {
    case GroupExpr::Kind::Atom: {
      if (e.atom == "Q8") return 8;
      if (e.atom == "C") return e.param;
      if (e.atom == "D") return 2LL * e.param;
      if (e.atom == "Dic") return 4LL * e.param;
      if (e.atom == "Heis") return static_cast<long long>(e.param) * e.param * e.param;
      long long f = 1;  // S or A
      for (int i = 2; i <= e.param; ++i) f *= i;
      return e.atom == "S" ? f : std::max(f / 2, 1LL);
    }
    case GroupExpr::Kind::Product: {
      long long n = 1;
      for (const auto& c : e.children) {
        n *= nominal_order(c);
        if (n > kCap) throw UsageError("group order out of range: " + print_expr(e));
      }
      return n;
    }
    case GroupExpr::Kind::Semidirect: {
      long long n = nominal_order(e.children[0]) * e.cyclic_order;
      if (n > kCap) throw UsageError("group order out of range: " + print_expr(e));
      return n;
    }
  }
  throw ComputeError("unreachable expression kind");
}

namespace {

std::vector<int> shift_permutation(const GroupExpr& base_expr, const FiniteGroup& base) {
  std::vector<long long> radix;
  if (base_expr.kind == GroupExpr::Kind::Product)
    for (const auto& c : base_expr.children) radix.push_back(nominal_order(c));
  else
    radix.push_back(base.order());
  const std::size_t k = radix.size();
  for (std::size_t i = 1; i < k; ++i)
    if (radix[i] != radix[0])
      throw VerifyError("shift action needs identical direct factors in " +
                        print_expr(base_expr));

  std::vector<int> alpha(base.order());
  std::vector<long long> d(k);
  for (int x = 0; x < base.order(); ++x) {
    long long rem = x;
    for (std::size_t i = k; i-- > 0;) {
      d[i] = rem % radix[i];
      rem /= radix[i];
    }
    long long v = 0;
    for (std::size_t i = 0; i < k; ++i) v = v * radix[i] + d[(i + 1) % k];
    alpha[x] = static_cast<int>(v);
  }
  return alpha;
}

FiniteGroup build(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Atom: {
      if (e.atom == "Q8") return make_dicyclic(2);
      if (e.atom == "C") return make_cyclic(e.param);
      if (e.atom == "D") return make_dihedral(e.param);
      if (e.atom == "Dic") return make_dicyclic(e.param);
      if (e.atom == "S") return make_symmetric(e.param);
      if (e.atom == "A") return make_alternating(e.param);
      return make_heisenberg_mod(e.param);
    }
    case GroupExpr::Kind::Product: {
      FiniteGroup acc = build(e.children[0]);
      for (std::size_t i = 1; i < e.children.size(); ++i)
        acc = direct_product(acc, build(e.children[i]));
      return acc;
    }
    case GroupExpr::Kind::Semidirect: {
      FiniteGroup base = build(e.children[0]);
      std::vector<int> alpha(base.order());
      switch (e.action.kind) {
        case ActionSpec::Kind::Inv:
          for (int x = 0; x < base.order(); ++x) alpha[x] = base.inv(x);
          break;
        case ActionSpec::Kind::Pow:
          for (int x = 0; x < base.order(); ++x)
            alpha[x] = base.pow(x, e.action.k);
          break;
        case ActionSpec::Kind::Shift:
          alpha = shift_permutation(e.children[0], base);
          break;
      }
      return semidirect_product(base, e.cyclic_order, alpha, print_expr(e));
    }
  }
  throw ComputeError("unreachable expression kind");
}

}  // namespace

FiniteGroup evaluate(const GroupExpr& e, int max_order) {
  const long long nominal = nominal_order(e);
  if (nominal > max_order)
    throw UsageError("order " + std::to_string(nominal) + " of " + print_expr(e) +
                     " exceeds limit " + std::to_string(max_order) +
                     " (raise with --max-order)");
  FiniteGroup g = build(e);
  g.set_label(print_expr(e));
  return g;
}

FiniteGroup evaluate(const std::string& text, int max_order) {
  return evaluate(parse_expr(text), max_order);
}

}  // namespace adiag
