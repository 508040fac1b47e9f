#include "hg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hg {

namespace {

GroupPtr with_label(const GroupPtr& g, const std::string& label) {
  const int n = g->order();
  std::vector<Elt> mul(g->row(0), g->row(0) + size_t(n) * n);
  return GroupTable::trusted(n, std::move(mul), label);
}

// ---- small finite fields -------------------------------------------------

// GF(q) for the prime powers used by the matrix constructors. Elements are
// 0..q-1; 0 and 1 are the additive and multiplicative identities.
struct Field {
  int q = 0;
  std::vector<int> addt, mult;

  explicit Field(int q_in) : q(q_in) {
    auto is_prime = [](int p) {
      for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
      return p >= 2;
    };
    addt.assign(size_t(q) * q, 0);
    mult.assign(size_t(q) * q, 0);
    if (is_prime(q)) {
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          addt[size_t(a) * q + b] = (a + b) % q;
          mult[size_t(a) * q + b] = (a * b) % q;
        }
    } else if (q == 4 || q == 8) {
      // F2[x] modulo x^2+x+1 (q=4) or x^3+x+1 (q=8), bit-packed.
      int red = q == 4 ? 0b111 : 0b1011;
      int deg = q == 4 ? 2 : 3;
      auto mulp = [&](int a, int b) {
        int r = 0;
        for (int i = 0; i < deg; ++i)
          if (b & (1 << i)) r ^= a << i;
        for (int i = 2 * deg - 2; i >= deg; --i)
          if (r & (1 << i)) r ^= red << (i - deg);
        return r;
      };
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          addt[size_t(a) * q + b] = a ^ b;
          mult[size_t(a) * q + b] = mulp(a, b);
        }
    } else if (q == 9) {
      // F3[x] modulo x^2+1; element a+3b stands for a+bx.
      for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) {
          int a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
          addt[size_t(a) * 9 + b] = (a0 + b0) % 3 + 3 * ((a1 + b1) % 3);
          int c0 = (a0 * b0 + 2 * a1 * b1) % 3;  // x^2 = -1
          int c1 = (a0 * b1 + a1 * b0) % 3;
          mult[size_t(a) * 9 + b] = c0 + 3 * c1;
        }
    } else {
      fail(ErrorKind::SpecOutOfRange,
           "no field of order " + std::to_string(q));
    }
  }

  int add(int a, int b) const { return addt[size_t(a) * q + b]; }
  int mul(int a, int b) const { return mult[size_t(a) * q + b]; }
  int neg(int a) const {
    for (int b = 0; b < q; ++b)
      if (add(a, b) == 0) return b;
    return -1;
  }
  int inv(int a) const {
    for (int b = 0; b < q; ++b)
      if (mul(a, b) == 1) return b;
    fail(ErrorKind::SpecOutOfRange, "division by zero");
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
};

struct Mat2 {
  int a, b, c, d;
  bool operator==(const Mat2&) const = default;
  bool operator<(const Mat2& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
};

Mat2 matmul(const Field& f, const Mat2& x, const Mat2& y) {
  return Mat2{f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)),
              f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
              f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)),
              f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

void check_q(int q) {
  static const int ok[] = {2, 3, 4, 5, 7, 8, 9, 11};
  if (std::find(std::begin(ok), std::end(ok), q) == std::end(ok))
    fail(ErrorKind::SpecOutOfRange,
         "q must be a prime power <= 11, got " + std::to_string(q));
}

// Builds the Cayley table of a set of abstract elements closed under `op`.
template <typename T, typename Op>
GroupPtr table_from_elements(std::vector<T> elems, Op&& op,
                             const std::string& label) {
  std::sort(elems.begin(), elems.end());
  const int n = int(elems.size());
  if (n > Caps::table_max)
    fail(ErrorKind::CapExceeded, label + " has order " + std::to_string(n));
  std::map<T, Elt> idx;
  for (int i = 0; i < n; ++i) idx[elems[i]] = i;
  std::vector<Elt> mul(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = idx.find(op(elems[i], elems[j]));
      if (it == idx.end())
        fail(ErrorKind::NotAGroup, label + ": element set is not closed");
      mul[size_t(i) * n + j] = it->second;
    }
  return GroupTable::trusted(n, std::move(mul), label);
}

using Perm = std::vector<int>;

Perm perm_compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

std::vector<Perm> perm_closure(std::vector<Perm> gens, int degree,
                               size_t cap) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen;
  std::vector<Perm> list;
  auto push = [&](const Perm& p) {
    if (seen.insert(p).second) list.push_back(p);
  };
  push(id);
  for (auto& g : gens) push(g);
  for (size_t i = 0; i < list.size(); ++i) {
    for (const auto& g : gens) {
      push(perm_compose(list[i], g));
      if (list.size() > cap)
        fail(ErrorKind::CapExceeded, "permutation closure exceeds cap");
    }
  }
  return list;
}

}  // namespace

// ---- basic constructors ----------------------------------------------------

GroupPtr cyclic(int n) {
  if (n < 1 || n > Caps::table_max)
    fail(ErrorKind::SpecOutOfRange, "cyclic order out of range");
  std::vector<Elt> mul(size_t(n) * n);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) mul[size_t(x) * n + y] = (x + y) % n;
  return GroupTable::trusted(n, std::move(mul), "C" + std::to_string(n));
}

GroupPtr abelian(const std::vector<int>& invariants) {
  if (invariants.empty())
    fail(ErrorKind::SpecOutOfRange, "abelian() needs at least one factor");
  long long total = 1;
  for (int d : invariants) {
    if (d < 1) fail(ErrorKind::SpecOutOfRange, "abelian factor must be >= 1");
    total *= d;
    if (total > Caps::table_max)
      fail(ErrorKind::SpecOutOfRange, "abelian group exceeds table cap");
  }
  const int n = int(total);
  const int k = int(invariants.size());
  auto decode = [&](int x, std::vector<int>& digits) {
    for (int i = k - 1; i >= 0; --i) {
      digits[i] = x % invariants[i];
      x /= invariants[i];
    }
  };
  std::vector<Elt> mul(size_t(n) * n);
  std::vector<int> dx(k), dy(k);
  for (Elt x = 0; x < n; ++x) {
    decode(x, dx);
    for (Elt y = 0; y < n; ++y) {
      decode(y, dy);
      int z = 0;
      for (int i = 0; i < k; ++i) z = z * invariants[i] + (dx[i] + dy[i]) % invariants[i];
      mul[size_t(x) * n + y] = z;
    }
  }
  std::string label = "C" + std::to_string(invariants[0]);
  for (int i = 1; i < k; ++i) label += "xC" + std::to_string(invariants[i]);
  return GroupTable::trusted(n, std::move(mul), label);
}

GroupPtr dihedral(int n) {
  if (n < 1 || 2 * n > Caps::table_max)
    fail(ErrorKind::SpecOutOfRange, "dihedral parameter out of range");
  const int m = 2 * n;
  // 0..n-1 rotations, n..2n-1 reflections.
  std::vector<Elt> mul(size_t(m) * m);
  for (Elt x = 0; x < m; ++x)
    for (Elt y = 0; y < m; ++y) {
      bool rx = x >= n, ry = y >= n;
      int i = rx ? x - n : x, j = ry ? y - n : y;
      Elt z;
      if (!rx && !ry) z = (i + j) % n;
      else if (!rx && ry) z = n + (j + i) % n;
      else if (rx && !ry) z = n + (i - j + n) % n;
      else z = (i - j + n) % n;
      mul[size_t(x) * m + y] = z;
    }
  return GroupTable::trusted(m, std::move(mul), "D" + std::to_string(m));
}

namespace {
GroupPtr sym_or_alt(int degree, bool even_only) {
  if (degree < 1 || degree > 7)
    fail(ErrorKind::SpecOutOfRange, "sym/alt degree must be 1..7");
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> elems;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < degree; ++i)
        for (int j = i + 1; j < degree; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::string label =
      (even_only ? "A" : "S") + std::to_string(degree);
  return table_from_elements(
      std::move(elems),
      [](const Perm& f, const Perm& g) { return perm_compose(f, g); }, label);
}
}  // namespace

GroupPtr sym(int degree) { return sym_or_alt(degree, false); }
GroupPtr alt(int degree) { return sym_or_alt(degree, true); }

GroupPtr sl2(int q) {
  check_q(q);
  Field f(q);
  std::vector<Mat2> elems;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d)
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 1)
            elems.push_back(Mat2{a, b, c, d});
  return table_from_elements(
      std::move(elems),
      [&f](const Mat2& x, const Mat2& y) { return matmul(f, x, y); },
      "SL2(" + std::to_string(q) + ")");
}

GroupPtr psl2(int q) {
  check_q(q);
  if (q % 2 == 0) return with_label(sl2(q), "PSL2(" + std::to_string(q) + ")");
  auto g = sl2(q);
  // Center is {I, -I}; -I has order 2 and is central.
  Subgroup z = center(g);
  if (z.size() != 2) fail(ErrorKind::Internal, "SL2 center should be {I,-I}");
  auto qres = quotient(g, z);
  return with_label(qres.table, "PSL2(" + std::to_string(q) + ")");
}

GroupPtr pgl2(int q) {
  check_q(q);
  Field f(q);
  const int pts = q + 1;  // projective line; q is the point at infinity
  std::set<Perm> seen;
  std::vector<Perm> elems;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
          Perm p(pts);
          for (int z = 0; z < q; ++z) {
            int num = f.add(f.mul(a, z), b), den = f.add(f.mul(c, z), d);
            p[z] = den == 0 ? q : f.mul(num, f.inv(den));
          }
          p[q] = c == 0 ? q : f.mul(a, f.inv(c));
          if (seen.insert(p).second) elems.push_back(p);
        }
  return table_from_elements(
      std::move(elems),
      [](const Perm& x, const Perm& y) { return perm_compose(x, y); },
      "PGL2(" + std::to_string(q) + ")");
}

// ---- products and actions --------------------------------------------------

GroupAction GroupAction::verified(GroupPtr src, GroupPtr tgt,
                                  std::vector<std::vector<Elt>> auto_of) {
  const int ns = src->order(), nt = tgt->order();
  if (int(auto_of.size()) != ns)
    fail(ErrorKind::BadAction, "one automorphism per source element required");
  for (const auto& a : auto_of) {
    if (int(a.size()) != nt || a[0] != 0)
      fail(ErrorKind::BadAction, "image table is not an automorphism");
    std::vector<char> hit(nt, 0);
    for (Elt v : a) {
      if (v < 0 || v >= nt || hit[v])
        fail(ErrorKind::BadAction, "image table is not a bijection");
      hit[v] = 1;
    }
    for (Elt x = 0; x < nt; ++x)
      for (Elt y = 0; y < nt; ++y)
        if (a[tgt->mul(x, y)] != tgt->mul(a[x], a[y]))
          fail(ErrorKind::BadAction, "image table is not a homomorphism");
  }
  for (Elt y1 = 0; y1 < ns; ++y1)
    for (Elt y2 = 0; y2 < ns; ++y2) {
      Elt y12 = src->mul(y1, y2);
      for (Elt x = 0; x < nt; ++x)
        if (auto_of[y12][x] != auto_of[y1][auto_of[y2][x]])
          fail(ErrorKind::BadAction,
               "action is not a homomorphism into Aut(target)");
    }
  return GroupAction{std::move(src), std::move(tgt), std::move(auto_of)};
}

GroupAction GroupAction::trivial(GroupPtr src, GroupPtr tgt) {
  std::vector<Elt> id(tgt->order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<Elt>> maps(src->order(), id);
  return GroupAction{std::move(src), std::move(tgt), std::move(maps)};
}

GroupAction GroupAction::named(const std::string& name, GroupPtr src,
                               GroupPtr tgt) {
  const int ns = src->order(), nt = tgt->order();
  if (name == "invert") {
    if (!tgt->is_abelian())
      fail(ErrorKind::BadAction, "invert action needs an abelian target");
    if (ns % 2 != 0 || src->elt_order(1) != ns)
      fail(ErrorKind::BadAction,
           "invert action needs a cyclic source of even order");
    std::vector<Elt> id(nt), invm(nt);
    std::iota(id.begin(), id.end(), 0);
    for (Elt x = 0; x < nt; ++x) invm[x] = tgt->inv(x);
    std::vector<std::vector<Elt>> maps(ns);
    for (Elt y = 0; y < ns; ++y) maps[y] = (y % 2 == 0) ? id : invm;
    return verified(std::move(src), std::move(tgt), std::move(maps));
  }
  if (name == "frobenius") {
    if (src->elt_order(1) != ns || tgt->elt_order(1) != nt)
      fail(ErrorKind::BadAction, "frobenius action needs cyclic groups");
    int m = -1;
    for (int cand = 2; cand < nt; ++cand) {
      if (std::gcd(cand, nt) != 1) continue;
      long long p = cand;
      int o = 1;
      while (p != 1) {
        p = p * cand % nt;
        ++o;
      }
      if (o == ns) {
        m = cand;
        break;
      }
    }
    if (m < 0)
      fail(ErrorKind::BadAction, "no unit of order " + std::to_string(ns) +
                                     " mod " + std::to_string(nt));
    std::vector<std::vector<Elt>> maps(ns);
    long long pw = 1;
    for (Elt y = 0; y < ns; ++y) {
      maps[y].resize(nt);
      for (Elt x = 0; x < nt; ++x) maps[y][x] = Elt(x * pw % nt);
      pw = pw * m % nt;
    }
    return verified(std::move(src), std::move(tgt), std::move(maps));
  }
  fail(ErrorKind::BadAction, "unknown action name '" + name + "'");
}

namespace {
bool same_table(const GroupPtr& x, const GroupPtr& y) {
  if (x.get() == y.get()) return true;
  if (x->order() != y->order()) return false;
  const size_t total = size_t(x->order()) * x->order();
  return std::equal(x->row(0), x->row(0) + total, y->row(0));
}
}  // namespace

GroupPtr product(const GroupPtr& a, const GroupPtr& b,
                 const GroupAction& action) {
  if (!same_table(action.src, b) || !same_table(action.tgt, a))
    fail(ErrorKind::BadAction, "action must map the right factor into Aut(left)");
  const int na = a->order(), nb = b->order();
  if (int64_t(na) * nb > Caps::table_max)
    fail(ErrorKind::SpecOutOfRange, "product exceeds table cap");
  const int n = na * nb;
  std::vector<Elt> mul(size_t(n) * n);
  for (Elt x1 = 0; x1 < na; ++x1)
    for (Elt y1 = 0; y1 < nb; ++y1)
      for (Elt x2 = 0; x2 < na; ++x2)
        for (Elt y2 = 0; y2 < nb; ++y2) {
          Elt xa = a->mul(x1, action.auto_of[y1][x2]);
          Elt yb = b->mul(y1, y2);
          mul[size_t(x1 * nb + y1) * n + (x2 * nb + y2)] = xa * nb + yb;
        }
  bool is_trivial = true;
  for (const auto& m : action.auto_of)
    for (Elt x = 0; x < na && is_trivial; ++x)
      if (m[x] != x) is_trivial = false;
  std::string label = a->label() + (is_trivial ? "x" : ":") + b->label();
  return GroupTable::trusted(n, std::move(mul), label);
}

GroupPtr product(const GroupPtr& a, const GroupPtr& b) {
  return product(a, b, GroupAction::trivial(b, a));
}

// ---- GroupSpec grammar -----------------------------------------------------

namespace {

struct SpecParser {
  const std::string& s;
  size_t pos = 0;

  explicit SpecParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(uint8_t(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      fail(ErrorKind::ParseError, std::string("expected '") + c +
                                      "' at position " + std::to_string(pos) +
                                      " in spec '" + s + "'");
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(uint8_t(s[pos])) || s[pos] == '_' ||
                              s[pos] == '^'))
      ++pos;
    if (start == pos)
      fail(ErrorKind::ParseError,
           "expected a name at position " + std::to_string(start) + " in '" +
               s + "'");
    return s.substr(start, pos - start);
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(uint8_t(s[pos]))) ++pos;
    if (start == pos)
      fail(ErrorKind::ParseError,
           "expected an integer at position " + std::to_string(start));
    return std::stoi(s.substr(start, pos - start));
  }
  // Path argument: everything up to the ')' that closes the call.
  std::string path_arg() {
    skip_ws();
    size_t end = s.find(')', pos);
    if (end == std::string::npos)
      fail(ErrorKind::ParseError, "unterminated file() spec");
    std::string p = s.substr(pos, end - pos);
    pos = end;
    while (!p.empty() && std::isspace(uint8_t(p.back()))) p.pop_back();
    return p;
  }

  GroupPtr parse() {
    std::string name = ident();
    std::string low;
    for (char c : name) low += char(std::tolower(uint8_t(c)));
    expect('(');
    GroupPtr result;
    if (low == "cyclic") {
      result = cyclic(integer());
    } else if (low == "abelian") {
      std::vector<int> ds{integer()};
      while (eat(',')) ds.push_back(integer());
      result = abelian(ds);
    } else if (low == "dihedral") {
      result = dihedral(integer());
    } else if (low == "sym") {
      result = sym(integer());
    } else if (low == "alt") {
      result = alt(integer());
    } else if (low == "sl2") {
      result = sl2(integer());
    } else if (low == "psl2") {
      result = psl2(integer());
    } else if (low == "pgl2") {
      result = pgl2(integer());
    } else if (low == "direct") {
      GroupPtr a = parse();
      expect(',');
      GroupPtr b = parse();
      result = product(a, b);
    } else if (low == "semidirect") {
      GroupPtr a = parse();
      expect(',');
      GroupPtr b = parse();
      expect(',');
      std::string action = ident();
      result = product(a, b, GroupAction::named(action, b, a));
    } else if (low == "file") {
      std::string p = path_arg();
      std::ifstream in(p);
      if (!in) fail(ErrorKind::ParseError, "cannot open group file " + p);
      result = parse_group_file(in, p);
    } else {
      fail(ErrorKind::ParseError, "unknown constructor '" + name + "'");
    }
    expect(')');
    return result;
  }
};

}  // namespace

GroupPtr build_group(const std::string& spec) {
  SpecParser p(spec);
  GroupPtr g = p.parse();
  p.skip_ws();
  if (p.pos != spec.size())
    fail(ErrorKind::ParseError, "trailing characters in spec '" + spec + "'");
  return g;
}

// ---- file formats ----------------------------------------------------------

namespace {

// Reads the next content line (skipping blanks and # comments).
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

std::vector<int> split_ints(const std::string& line, int lineno) {
  std::istringstream is(line);
  std::vector<int> out;
  long long v;
  while (is >> v) out.push_back(int(v));
  if (!is.eof()) {
    std::string tok;
    is.clear();
    is >> tok;
    if (!tok.empty() && tok != "\r")
      fail(ErrorKind::ParseError,
           "line " + std::to_string(lineno) + ": unexpected token '" + tok + "'");
  }
  return out;
}

}  // namespace

GroupPtr parse_group_file(std::istream& in, const std::string& name) {
  int lineno = 0;
  std::string line;
  if (!next_line(in, line, lineno))
    fail(ErrorKind::ParseError, name + ": empty file");
  std::istringstream head(line);
  std::string fmt;
  int ver = 0;
  head >> fmt >> ver;
  if (fmt == "gtab" && ver == 1) {
    if (!next_line(in, line, lineno))
      fail(ErrorKind::ParseError, name + ": missing order line");
    auto ns = split_ints(line, lineno);
    if (ns.size() != 1 || ns[0] < 1)
      fail(ErrorKind::ParseError,
           name + ": line " + std::to_string(lineno) + ": bad order");
    const int n = ns[0];
    std::vector<Elt> mul;
    mul.reserve(size_t(n) * n);
    for (int r = 0; r < n; ++r) {
      if (!next_line(in, line, lineno))
        fail(ErrorKind::ParseError, name + ": line " + std::to_string(lineno) +
                                        ": expected " + std::to_string(n) +
                                        " table rows");
      auto row = split_ints(line, lineno);
      if (int(row.size()) != n)
        fail(ErrorKind::ParseError, name + ": line " + std::to_string(lineno) +
                                        ": row has " +
                                        std::to_string(row.size()) +
                                        " entries, expected " +
                                        std::to_string(n));
      for (int v : row) mul.push_back(v);
    }
    // The format pins the identity at index 0 (no silent relabeling).
    for (Elt x = 0; x < n; ++x)
      if (mul[x] != x || mul[size_t(x) * n] != x)
        fail(ErrorKind::ParseError, name + ": identity must be index 0");
    return GroupTable::build(n, std::move(mul), name);
  }
  if (fmt == "pgen" && ver == 1) {
    if (!next_line(in, line, lineno))
      fail(ErrorKind::ParseError, name + ": missing degree line");
    auto ds = split_ints(line, lineno);
    if (ds.size() != 1 || ds[0] < 1)
      fail(ErrorKind::ParseError,
           name + ": line " + std::to_string(lineno) + ": bad degree");
    const int degree = ds[0];
    bool as_table = false;
    std::vector<Perm> gens;
    while (next_line(in, line, lineno)) {
      std::string trimmed = line;
      trimmed.erase(0, trimmed.find_first_not_of(" \t"));
      while (!trimmed.empty() &&
             (trimmed.back() == '\r' || trimmed.back() == ' '))
        trimmed.pop_back();
      if (trimmed == "table") {
        as_table = true;
        continue;
      }
      auto img = split_ints(line, lineno);
      if (int(img.size()) != degree)
        fail(ErrorKind::ParseError, name + ": line " + std::to_string(lineno) +
                                        ": generator needs " +
                                        std::to_string(degree) + " images");
      std::vector<char> hit(degree, 0);
      for (int v : img) {
        if (v < 0 || v >= degree || hit[v])
          fail(ErrorKind::ParseError, name + ": line " +
                                          std::to_string(lineno) +
                                          ": not a permutation");
        hit[v] = 1;
      }
      gens.push_back(Perm(img.begin(), img.end()));
    }
    auto elems = perm_closure(gens, degree, Caps::table_max);
    if (as_table) {
      return table_from_elements(
          std::move(elems),
          [](const Perm& x, const Perm& y) { return perm_compose(x, y); },
          name);
    }
    // Regular action required: |closure| == degree and 0 reaches every point.
    if (int(elems.size()) != degree)
      fail(ErrorKind::ParseError,
           name + ": closure has order " + std::to_string(elems.size()) +
               " on " + std::to_string(degree) +
               " points; not regular (add a 'table' line to convert)");
    std::vector<Elt> by_point(degree, -1);
    for (int i = 0; i < int(elems.size()); ++i) {
      int p = elems[i][0];
      if (by_point[p] >= 0)
        fail(ErrorKind::ParseError,
             name + ": action is not free; not regular");
      by_point[p] = i;
    }
    std::vector<Elt> mul(size_t(degree) * degree);
    for (int i = 0; i < degree; ++i)
      for (int j = 0; j < degree; ++j)
        mul[size_t(i) * degree + j] = elems[by_point[i]][j];
    return GroupTable::build(degree, std::move(mul), name);
  }
  fail(ErrorKind::ParseError, name + ": unknown header '" + line + "'");
}

GroupPtr parse_group_file_text(const std::string& text,
                               const std::string& name) {
  std::istringstream in(text);
  return parse_group_file(in, name);
}

std::string serialize(const GroupPtr& g) {
  std::ostringstream os;
  os << "gtab 1\n" << g->order() << "\n";
  for (Elt x = 0; x < g->order(); ++x) {
    for (Elt y = 0; y < g->order(); ++y) {
      if (y) os << ' ';
      os << g->mul(x, y);
    }
    os << '\n';
  }
  return os.str();
}

// ---- bundled census ---------------------------------------------------------

namespace {

GroupPtr quaternion8() {
  auto g = sl2(3);
  // The Sylow 2-subgroup of SL2(3) is Q8: any two distinct order-4 cyclic
  // subgroups generate it.
  for (Elt x = 0; x < g->order(); ++x) {
    if (g->elt_order(x) != 4) continue;
    for (Elt y = x + 1; y < g->order(); ++y) {
      if (g->elt_order(y) != 4) continue;
      auto s = close_generated(g, {x, y});
      if (s.size() == 8) return with_label(subgroup_table(s).table, "Q8");
    }
  }
  fail(ErrorKind::Internal, "Q8 not found inside SL2(3)");
}

CensusEntry make_entry(GroupPtr g, const std::string& label,
                       const std::string& provenance) {
  CensusEntry e;
  e.group = label == g->label() ? g : with_label(g, label);
  e.order = g->order();
  e.label = label;
  auto ds = derived_series(e.group);
  e.solvable = ds.solvable;
  e.perfect = ds.perfect;
  e.abelian = g->is_abelian();
  e.provenance = provenance;
  return e;
}

}  // namespace

CensusTier bundled_census(int order, const std::string& extra_dir) {
  CensusTier tier;
  tier.order = order;
  auto add = [&](GroupPtr g, const std::string& label) {
    tier.entries.push_back(make_entry(std::move(g), label, "constructor"));
  };
  switch (order) {
    case 1: add(cyclic(1), "C1"); break;
    case 2: add(cyclic(2), "C2"); break;
    case 3: add(cyclic(3), "C3"); break;
    case 4:
      add(cyclic(4), "C4");
      add(abelian({2, 2}), "V4");
      break;
    case 5: add(cyclic(5), "C5"); break;
    case 6:
      add(cyclic(6), "C6");
      add(dihedral(3), "S3");
      break;
    case 7: add(cyclic(7), "C7"); break;
    case 8:
      add(cyclic(8), "C8");
      add(abelian({4, 2}), "C4xC2");
      add(abelian({2, 2, 2}), "C2^3");
      add(dihedral(4), "D4");
      add(quaternion8(), "Q8");
      break;
    case 15: add(cyclic(15), "C15"); break;
    case 60:
      add(alt(5), "A5");
      add(cyclic(60), "C60");
      add(abelian({2, 30}), "C2xC30");
      add(dihedral(30), "D60");
      add(product(dihedral(3), cyclic(10)), "S3xC10");
      add(product(alt(4), cyclic(5)), "A4xC5");
      add(product(dihedral(5), dihedral(3)), "D10xS3");
      break;
    case 120:
      add(sl2(5), "SL2(5)");
      add(sym(5), "S5");
      add(product(alt(5), cyclic(2)), "A5xC2");
      add(cyclic(120), "C120");
      add(abelian({2, 60}), "C2xC60");
      add(dihedral(60), "D120");
      add(product(dihedral(3), cyclic(20)), "S3xC20");
      add(product(alt(4), cyclic(10)), "A4xC10");
      add(product(sym(4), cyclic(5)), "S4xC5");
      break;
    case 336:
      add(sl2(7), "SL2(7)");
      add(pgl2(7), "PGL2(7)");
      add(product(psl2(7), cyclic(2)), "PSL2(7)xC2");
      add(cyclic(336), "C336");
      add(abelian({2, 168}), "C2xC168");
      add(dihedral(168), "D336");
      add(product(dihedral(3), cyclic(56)), "S3xC56");
      break;
    default:
      fail(ErrorKind::UnknownOrder,
           "no bundled census for order " + std::to_string(order));
  }
  tier.exhaustive = order <= 8 || order == 15;
  tier.insolvable_exhaustive = true;

  if (!extra_dir.empty()) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(extra_dir))
      fail(ErrorKind::ParseError, "census dir not found: " + extra_dir);
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(extra_dir)) {
      auto ext = de.path().extension().string();
      if (ext == ".gtab" || ext == ".pgen") files.push_back(de.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      std::ifstream in(p);
      GroupPtr g = parse_group_file(in, p.filename().string());
      if (g->order() != order) continue;
      bool dup = false;
      for (const auto& e : tier.entries)
        if (are_isomorphic(e.group, g)) {
          dup = true;
          break;
        }
      if (!dup)
        tier.entries.push_back(
            make_entry(with_label(g, p.stem().string()), p.stem().string(),
                       p.filename().string()));
    }
  }

  // Bundled tiers must be duplicate-free up to isomorphism.
  for (size_t i = 0; i < tier.entries.size(); ++i)
    for (size_t j = i + 1; j < tier.entries.size(); ++j)
      if (are_isomorphic(tier.entries[i].group, tier.entries[j].group))
        fail(ErrorKind::Internal, "census tier contains isomorphic entries " +
                                      tier.entries[i].label + " and " +
                                      tier.entries[j].label);
  return tier;
}

}  // namespace hg
