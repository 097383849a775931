#include "racg/l2.hpp"

#include <algorithm>
#include <sstream>

#include "racg/davis.hpp"
#include "racg/errors.hpp"

namespace racg {

// --- constructors -------------------------------------------------------------

L2Expr L2Expr::empty() { return L2Expr{}; }

L2Expr L2Expr::simplex(int k) {
  if (k < 0) throw PreconditionError("simplex: k >= 0 required (use empty for k = -1)");
  L2Expr e;
  e.kind_ = Kind::Simplex;
  e.param_ = k;
  e.simplex_flag_ = true;
  return e;
}

L2Expr L2Expr::points(int k) {
  if (k < 0) throw PreconditionError("points: k >= 0 required");
  if (k == 0) return empty();
  if (k == 1) return simplex(0);
  L2Expr e;
  e.kind_ = Kind::Points;
  e.param_ = k;
  return e;
}

L2Expr L2Expr::m_gon(int m) {
  if (m < 4) throw PreconditionError("m-gon: m >= 4 required for flagness");
  L2Expr e;
  e.kind_ = Kind::MGon;
  e.param_ = m;
  return e;
}

L2Expr L2Expr::cone(L2Expr c) {
  if (c.kind_ == Kind::Empty) return simplex(0);
  L2Expr e;
  e.kind_ = Kind::Cone;
  e.simplex_flag_ = c.simplex_flag_;
  e.children_.push_back(std::make_shared<L2Expr>(std::move(c)));
  return e;
}

L2Expr L2Expr::susp(L2Expr c) {
  if (c.kind_ == Kind::Empty) return points(2);
  L2Expr e;
  e.kind_ = Kind::Susp;
  e.children_.push_back(std::make_shared<L2Expr>(std::move(c)));
  return e;
}

L2Expr L2Expr::join(L2Expr a, L2Expr b) {
  if (a.kind_ == Kind::Empty) return b;
  if (b.kind_ == Kind::Empty) return a;
  L2Expr e;
  e.kind_ = Kind::Join;
  e.simplex_flag_ = a.simplex_flag_ && b.simplex_flag_;
  e.children_.push_back(std::make_shared<L2Expr>(std::move(a)));
  e.children_.push_back(std::make_shared<L2Expr>(std::move(b)));
  return e;
}

L2Expr L2Expr::disjoint_union(L2Expr a, L2Expr b) {
  if (a.kind_ == Kind::Empty) return b;
  if (b.kind_ == Kind::Empty) return a;
  L2Expr e;
  e.kind_ = Kind::DisjointUnion;
  e.children_.push_back(std::make_shared<L2Expr>(std::move(a)));
  e.children_.push_back(std::make_shared<L2Expr>(std::move(b)));
  return e;
}

L2Expr L2Expr::double_v(L2Expr c, std::string vertex_label) {
  if (c.kind_ == Kind::Empty)
    throw PreconditionError("double: the empty complex has no vertex to double along");
  L2Expr e;
  e.kind_ = Kind::DoubleV;
  e.simplex_flag_ = c.simplex_flag_;
  e.name_ = std::move(vertex_label);
  e.children_.push_back(std::make_shared<L2Expr>(std::move(c)));
  return e;
}

L2Expr L2Expr::opaque(std::string name, FVector f, BettiVector partial, bool simplex_flag) {
  L2Expr e;
  e.kind_ = Kind::Opaque;
  e.name_ = std::move(name);
  e.fvec_ = std::move(f);
  e.partial_ = std::move(partial);
  e.simplex_flag_ = simplex_flag;
  return e;
}

// --- structural values ---------------------------------------------------------

int L2Expr::dim() const {
  switch (kind_) {
    case Kind::Empty:
      return -1;
    case Kind::Simplex:
      return param_;
    case Kind::Points:
      return 0;
    case Kind::MGon:
      return 1;
    case Kind::Cone:
    case Kind::Susp:
      return child(0).dim() + 1;
    case Kind::Join:
      return child(0).dim() + child(1).dim() + 1;
    case Kind::DisjointUnion:
      return std::max(child(0).dim(), child(1).dim());
    case Kind::DoubleV:
      return child(0).dim();
    case Kind::Opaque:
      return fvec_.dim();
  }
  return -1;
}

Rat L2Expr::kappa_value() const {
  switch (kind_) {
    case Kind::Empty:
      return 1;
    case Kind::Simplex:
      return Rat(1, Int(1) << (param_ + 1));
    case Kind::Points:
      return Rat(1) - Rat(param_, 2);
    case Kind::MGon:
      return Rat(1) - Rat(param_, 4);
    case Kind::Cone:
      return child(0).kappa_value() / 2;
    case Kind::Susp:
      return 0;
    case Kind::Join:
      return child(0).kappa_value() * child(1).kappa_value();
    case Kind::DisjointUnion:
      return child(0).kappa_value() + child(1).kappa_value() - 1;
    case Kind::DoubleV:
      return 2 * child(0).kappa_value();  // index-two multiplicativity
    case Kind::Opaque:
      return kappa(fvec_);
  }
  return 0;
}

namespace {

// offset convolution: f_k = sum_{i+j=k-1} f_i(a) f_j(b), indices from -1
FVector convolve_f(const FVector& a, const FVector& b) {
  FVector out;
  out.counts.assign(a.counts.size() + b.counts.size() - 1, 0);
  for (size_t i = 0; i < a.counts.size(); ++i)
    for (size_t j = 0; j < b.counts.size(); ++j) out.counts[i + j] += a.counts[i] * b.counts[j];
  return out;
}

}  // namespace

FVector L2Expr::f_vector() const {
  switch (kind_) {
    case Kind::Empty:
      return FVector{{1}};
    case Kind::Simplex: {
      FVector f{{1}};
      for (int k = 0; k <= param_; ++k) {
        // binomial column: f_k(simplex^p) = C(p+1, k+1)
        FVector point{{Int(1), Int(1)}};
        f = convolve_f(f, point);
      }
      return f;
    }
    case Kind::Points:
      return FVector{{1, Int(param_)}};
    case Kind::MGon:
      return FVector{{1, Int(param_), Int(param_)}};
    case Kind::Cone:
      return convolve_f(child(0).f_vector(), FVector{{1, 1}});
    case Kind::Susp:
      return convolve_f(child(0).f_vector(), FVector{{1, 2}});
    case Kind::Join:
      return convolve_f(child(0).f_vector(), child(1).f_vector());
    case Kind::DisjointUnion: {
      FVector a = child(0).f_vector(), b = child(1).f_vector();
      FVector out;
      out.counts.assign(std::max(a.counts.size(), b.counts.size()), 0);
      out.counts[0] = 1;
      for (size_t i = 1; i < out.counts.size(); ++i) {
        if (i < a.counts.size()) out.counts[i] += a.counts[i];
        if (i < b.counts.size()) out.counts[i] += b.counts[i];
      }
      return out;
    }
    case Kind::DoubleV:
      throw PreconditionError("f-vector of a double is not determined by the expression tree");
    case Kind::Opaque:
      return fvec_;
  }
  return FVector{{1}};
}

bool L2Expr::is_simplex_complex() const {
  if (kind_ == Kind::Empty) return true;  // conservative: keeps union rules silent
  return simplex_flag_;
}

bool L2Expr::contains_opaque() const {
  if (kind_ == Kind::Opaque) return true;
  for (const auto& c : children_)
    if (c->contains_opaque()) return true;
  return false;
}

std::string L2Expr::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Empty:
      os << "empty";
      break;
    case Kind::Simplex:
      os << "(simplex " << param_ << ")";
      break;
    case Kind::Points:
      os << "(points " << param_ << ")";
      break;
    case Kind::MGon:
      os << "(mgon " << param_ << ")";
      break;
    case Kind::Cone:
      os << "(cone " << child(0).str() << ")";
      break;
    case Kind::Susp:
      os << "(susp " << child(0).str() << ")";
      break;
    case Kind::Join:
      os << "(join " << child(0).str() << " " << child(1).str() << ")";
      break;
    case Kind::DisjointUnion:
      os << "(union " << child(0).str() << " " << child(1).str() << ")";
      break;
    case Kind::DoubleV:
      os << "(double " << child(0).str() << ")";
      break;
    case Kind::Opaque:
      os << "(opaque " << (name_.empty() ? "?" : name_) << " " << fvec_.str() << ")";
      break;
  }
  return os.str();
}

// --- parser ---------------------------------------------------------------------

namespace {

struct Tokens {
  std::vector<std::string> toks;
  size_t pos = 0;
  const std::string& peek() const {
    static const std::string end = "";
    return pos < toks.size() ? toks[pos] : end;
  }
  std::string next() {
    if (pos >= toks.size()) throw ParseError("unexpected end of expression");
    return toks[pos++];
  }
};

L2Expr parse_node(Tokens& t) {
  std::string tok = t.next();
  if (tok == "empty") return L2Expr::empty();
  if (tok != "(") throw ParseError("expected '(' or 'empty', got '" + tok + "'");
  std::string head = t.next();
  auto close = [&] {
    std::string c = t.next();
    if (c != ")") throw ParseError("expected ')' after " + head);
  };
  auto int_arg = [&]() {
    std::string a = t.next();
    try {
      return std::stoi(a);
    } catch (...) {
      throw ParseError("expected integer argument for " + head + ", got '" + a + "'");
    }
  };
  if (head == "simplex") {
    int k = int_arg();
    close();
    return L2Expr::simplex(k);
  }
  if (head == "points") {
    int k = int_arg();
    close();
    return L2Expr::points(k);
  }
  if (head == "mgon") {
    int m = int_arg();
    close();
    return L2Expr::m_gon(m);
  }
  if (head == "cone") {
    L2Expr c = parse_node(t);
    close();
    return L2Expr::cone(std::move(c));
  }
  if (head == "susp") {
    L2Expr c = parse_node(t);
    close();
    return L2Expr::susp(std::move(c));
  }
  if (head == "double") {
    L2Expr c = parse_node(t);
    close();
    return L2Expr::double_v(std::move(c));
  }
  if (head == "join" || head == "union") {
    std::vector<L2Expr> parts;
    while (t.peek() != ")") parts.push_back(parse_node(t));
    close();
    if (parts.size() < 2) throw ParseError(head + " needs at least two arguments");
    L2Expr acc = parts.back();
    for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i) {
      acc = head == "join" ? L2Expr::join(parts[i], std::move(acc))
                           : L2Expr::disjoint_union(parts[i], std::move(acc));
    }
    return acc;
  }
  throw ParseError("unknown expression head '" + head + "'");
}

}  // namespace

L2Expr parse_l2_expr(const std::string& text) {
  Tokens t;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')') {
      if (!cur.empty()) {
        t.toks.push_back(cur);
        cur.clear();
      }
      t.toks.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        t.toks.push_back(cur);
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) t.toks.push_back(cur);
  L2Expr e = parse_node(t);
  if (t.pos != t.toks.size()) throw ParseError("trailing tokens after expression");
  return e;
}

// --- evaluation -------------------------------------------------------------------

std::string L2Result::str() const {
  std::ostringstream os;
  for (int d = 0; d <= betti.max_degree(); ++d) {
    if (d) os << ", ";
    os << "b" << d << " = " << (betti.is_known(d) ? to_string(betti.values[d]) : "?");
  }
  return os.str();
}

namespace {

struct Deg {
  Rat value;
  bool known = false;
  std::string how;
};

L2Result pack(std::vector<Deg> degs) {
  L2Result r;
  r.betti = BettiVector::all_unknown(static_cast<int>(degs.size()) - 1);
  r.provenance.assign(degs.size(), "unknown");
  for (size_t d = 0; d < degs.size(); ++d) {
    if (degs[d].known) {
      r.betti.set(static_cast<int>(d), degs[d].value);
      r.provenance[d] = degs[d].how;
    }
  }
  return r;
}

// solve at most one unknown degree from Atiyah's formula
void atiyah_complete(const L2Expr& e, std::vector<Deg>& degs) {
  int unknown = -1, count = 0;
  for (size_t d = 0; d < degs.size(); ++d) {
    if (!degs[d].known) {
      unknown = static_cast<int>(d);
      ++count;
    }
  }
  if (count != 1) return;
  Rat sum = 0;
  for (size_t d = 0; d < degs.size(); ++d) {
    if (static_cast<int>(d) == unknown) continue;
    sum += (d % 2 == 0) ? degs[d].value : -degs[d].value;
  }
  Rat residual = e.kappa_value() - sum;  // (-1)^unknown * beta_unknown
  Rat beta = (unknown % 2 == 0) ? residual : -residual;
  if (beta < 0)
    throw LemmaViolation("Atiyah completion produced a negative Betti number for " + e.str());
  degs[unknown] = {beta, true, "atiyah-completion"};
}

std::vector<Deg> eval(const L2Expr& e);

std::vector<Deg> eval_children_combine(const L2Expr& e) {
  using Kind = L2Expr::Kind;
  int top = e.dim() + 1;
  std::vector<Deg> degs(std::max(top + 1, 1));
  switch (e.kind()) {
    case Kind::Empty: {
      degs[0] = {Rat(1), true, "empty-complex"};
      break;
    }
    case Kind::Simplex: {
      for (int d = 0; d <= top; ++d) degs[d] = {Rat(0), true, "finite-group"};
      degs[0] = {Rat(1, Int(1) << (e.param() + 1)), true, "finite-group"};
      break;
    }
    case Kind::Points: {
      degs[0] = {Rat(0), true, "k-points"};
      degs[1] = {Rat(e.param(), 2) - 1, true, "k-points"};
      break;
    }
    case Kind::MGon: {
      degs[0] = {Rat(0), true, "b0-vanishing"};
      degs[2] = {Rat(0), true, "top-vanishing"};
      break;  // b1 filled by Atiyah completion below
    }
    case Kind::Cone: {
      auto c = eval(e.child(0));
      for (size_t d = 0; d < degs.size(); ++d) {
        if (d < c.size() && c[d].known)
          degs[d] = {c[d].value / 2, true, "cone-halving"};
        else if (d >= c.size())
          degs[d] = {Rat(0), true, "cone-halving"};
      }
      break;
    }
    case Kind::Susp: {
      for (int d = 0; d <= top; ++d) degs[d] = {Rat(0), true, "suspension-vanishing"};
      break;
    }
    case Kind::Join: {
      auto a = eval(e.child(0));
      auto b = eval(e.child(1));
      for (int k = 0; k <= top; ++k) {
        Rat sum = 0;
        bool known = true;
        for (int i = 0; i <= k; ++i) {
          int j = k - i;
          Rat va = i < static_cast<int>(a.size()) ? (a[i].known ? a[i].value : Rat(0)) : Rat(0);
          Rat vb = j < static_cast<int>(b.size()) ? (b[j].known ? b[j].value : Rat(0)) : Rat(0);
          bool ka = i >= static_cast<int>(a.size()) || a[i].known;
          bool kb = j >= static_cast<int>(b.size()) || b[j].known;
          if (ka && kb) {
            sum += va * vb;
          } else if ((ka && va == 0) || (kb && vb == 0)) {
            // a known zero factor kills the unknown term
          } else {
            known = false;
            break;
          }
        }
        if (known) degs[k] = {sum, true, "kunneth"};
      }
      break;
    }
    case Kind::DisjointUnion: {
      auto a = eval(e.child(0));
      auto b = eval(e.child(1));
      auto val = [](const std::vector<Deg>& v, int d) -> const Deg* {
        static Deg zero{Rat(0), true, "out-of-range"};
        if (d >= static_cast<int>(v.size())) return &zero;
        return &v[d];
      };
      // a union of two nonempty complexes is never a simplex
      degs[0] = {Rat(0), true, "b0-vanishing"};
      for (int d = 2; d <= top; ++d) {
        const Deg* x = val(a, d);
        const Deg* y = val(b, d);
        if (x->known && y->known) degs[d] = {x->value + y->value, true, "union-additivity"};
      }
      const Deg* x = val(a, 1);
      const Deg* y = val(b, 1);
      if (!e.child(0).is_simplex_complex() && !e.child(1).is_simplex_complex()) {
        if (x->known && y->known)
          degs[1] = {x->value + y->value + 1, true, "union-additivity"};
      }
      // with a simplex side the b1 formula is not part of the calculus;
      // left unknown for Atiyah completion to resolve
      break;
    }
    case Kind::DoubleV: {
      auto c = eval(e.child(0));
      for (int d = 0; d <= top; ++d) {
        if (d < static_cast<int>(c.size()) && c[d].known)
          degs[d] = {2 * c[d].value, true, "index-two-double"};
        else if (d >= static_cast<int>(c.size()))
          degs[d] = {Rat(0), true, "index-two-double"};
      }
      break;
    }
    case Kind::Opaque: {
      const BettiVector& partial = e.opaque_partial();
      for (int d = 0; d <= top; ++d) {
        if (partial.is_known(d)) degs[d] = {partial.values[d], true, "vanishing-rules"};
      }
      break;
    }
  }
  return degs;
}

std::vector<Deg> eval(const L2Expr& e) {
  auto degs = eval_children_combine(e);
  atiyah_complete(e, degs);
  return degs;
}

}  // namespace

L2Result l2_betti(const L2Expr& e) { return pack(eval(e)); }

L2Result l2_betti_of_complex(const FlagComplex& L) {
  L2Expr e = recognize(L);
  L2Result r = l2_betti(e);
  // cross-check the calculus against the direct vanishing rules
  BettiVector v = vanishing_rules(L);
  for (int d = 0; d <= v.max_degree(); ++d) {
    if (!v.is_known(d)) continue;
    if (r.betti.is_known(d)) {
      if (r.betti.values[d] != v.values[d])
        throw LemmaViolation("vanishing rules contradict the calculus in degree " +
                             std::to_string(d));
    } else {
      r.betti.set(d, v.values[d]);
      if (d < static_cast<int>(r.provenance.size())) r.provenance[d] = "vanishing-rules";
    }
  }
  return r;
}

std::string AtiyahReport::str() const {
  std::ostringstream os;
  os << "sum (-1)^i b_i = " << to_string(alternating_sum) << ", kappa = " << to_string(kappa_value)
     << (consistent() ? "  [consistent]" : "  [MISMATCH]");
  return os.str();
}

AtiyahReport atiyah_check(const L2Expr& e, const L2Result& result) {
  if (!result.betti.fully_known())
    throw PreconditionError("atiyah_check: all degrees must be known");
  AtiyahReport rep;
  rep.alternating_sum = 0;
  for (int d = 0; d <= result.betti.max_degree(); ++d) {
    Rat v = result.betti.values[d];
    rep.alternating_sum += (d % 2 == 0) ? v : -v;
  }
  rep.kappa_value = e.kappa_value();
  return rep;
}

AtiyahReport atiyah_check(const FlagComplex& L) {
  L2Expr e = recognize(L);
  L2Result r = l2_betti_of_complex(L);
  if (!r.betti.fully_known())
    throw PreconditionError("atiyah_check: Betti numbers of this complex are not fully known");
  AtiyahReport rep = atiyah_check(e, r);
  rep.kappa_value = kappa(L);  // from the concrete f-vector, not the tree
  return rep;
}

// --- recognizer ---------------------------------------------------------------------

namespace {

bool is_complete_graph(const FlagComplex& L) {
  int n = L.size();
  return L.num_edges() == n * (n - 1) / 2;
}

// single cycle through all vertices, each of valence 2
bool is_single_cycle(const FlagComplex& L) {
  int n = L.size();
  if (n < 3 || L.num_edges() != n) return false;
  for (int v = 0; v < n; ++v)
    if (L.neighbors(v).size() != 2) return false;
  // connectivity
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : L.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

std::vector<std::vector<int>> complement_components(const FlagComplex& L) {
  int n = L.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (u != x && !L.adjacent(x, u) && comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
      }
    }
    ++c;
  }
  std::vector<std::vector<int>> out(c);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

}  // namespace

L2Expr recognize(const FlagComplex& L) {
  int n = L.size();
  if (n == 0) return L2Expr::empty();
  if (is_complete_graph(L)) return L2Expr::simplex(n - 1);
  if (L.num_edges() == 0) return L2Expr::points(n);
  if (is_single_cycle(L)) return L2Expr::m_gon(n);  // n = 3 is complete, caught above
  // cone: a vertex adjacent to all others
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(L.neighbors(v).size()) == n - 1)
      return L2Expr::cone(recognize(minus(L, {L.label(v)})));
  }
  // join decomposition along the components of the complement graph
  auto comps = complement_components(L);
  if (comps.size() >= 2) {
    L2Expr acc = L2Expr::empty();
    for (int i = static_cast<int>(comps.size()) - 1; i >= 0; --i) {
      std::vector<Vertex> vs;
      for (int v : comps[i]) vs.push_back(L.label(v));
      L2Expr factor = recognize(full_subcomplex(L, vs));
      acc = i == static_cast<int>(comps.size()) - 1 ? std::move(factor)
                                                    : L2Expr::join(std::move(factor), std::move(acc));
    }
    return acc;
  }
  return L2Expr::opaque("unrecognized", L.f_vector(), vanishing_rules(L), false);
}

BettiVector vanishing_rules(const FlagComplex& L) {
  int top = L.dim() + 1;
  BettiVector out = BettiVector::all_unknown(std::max(top, 0));
  if (L.size() > 0 && !is_complete_graph(L)) out.set(0, Rat(0));
  if (L.size() > 0) {
    SimplicialComplex K = SimplicialComplex::from_flag(L);
    if (K.is_pure() && is_pseudomanifold(K)) out.set(top, Rat(0));
  }
  return out;
}

PlanarResult planar_betti(int genus_holes_g, const std::vector<int>& boundary_gons) {
  if (genus_holes_g < 0) throw PreconditionError("planar_betti: g >= 0 required");
  for (int m : boundary_gons)
    if (m < 4) throw PreconditionError("planar_betti: boundary m-gon with m < 4 is not flag");
  PlanarResult res;
  res.alpha = 0;
  for (int m : boundary_gons) res.alpha += (Rat(m, 4) - 1) / 2;  // half of b1(m-gon)

  res.absolute.betti = BettiVector::zeros(3);
  res.absolute.provenance.assign(4, "planar-with-holes");
  res.absolute.betti.set(1, res.alpha);

  res.relative.betti = BettiVector::zeros(3);
  res.relative.provenance.assign(4, "planar-with-holes-relative");
  res.relative.betti.set(2, Rat(genus_holes_g) + res.alpha);
  return res;
}

}  // namespace racg
