#include "dualbent/constructions.hpp"

#include <set>
#include <sstream>

namespace dualbent {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

class Params {
 public:
  explicit Params(const ConstructionId& id) : id_(id) {}
  unsigned uint(const std::string& key) const {
    auto it = id_.params.find(key);
    if (it == id_.params.end()) throw PreconditionError(id_.tag + ": missing parameter '" + key + "'");
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("trailing");
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw PreconditionError(id_.tag + ": parameter '" + key + "' is not an unsigned integer");
    }
  }
  std::string str(const std::string& key, const std::string& def) const {
    auto it = id_.params.find(key);
    return it == id_.params.end() ? def : it->second;
  }

 private:
  const ConstructionId& id_;
};

// "z" is zero, otherwise an exponent of the primitive element.
Index element(const GaloisField& F, const std::string& spec) {
  if (spec == "z") return 0;
  try {
    long long e = std::stoll(spec);
    long long ord = static_cast<long long>(F.order() - 1);
    e %= ord;
    if (e < 0) e += ord;
    return F.exp(static_cast<std::uint64_t>(e));
  } catch (const std::exception&) {
    throw PreconditionError("bad field element exponent '" + spec + "'");
  }
}

// Tr_m^k followed by the subfield map, tabulated over GF(p^k).
std::vector<std::uint32_t> trace_table(const SubfieldMap& emb, unsigned m) {
  const GaloisField& B = emb.big();
  std::vector<std::uint32_t> t(B.order());
  for (Index a = 0; a < B.order(); ++a) t[a] = static_cast<std::uint32_t>(emb.to_small(B.trace(a, m)));
  return t;
}

void require_size(unsigned p, unsigned n, const std::string& what) {
  std::uint64_t size = 0;
  try {
    size = ipow(p, n);
  } catch (const GuardError&) {
    throw GuardError(what + ": domain p^n overflows; verify at reduced parameters");
  }
  enforce_guard(Guard::FastWalsh, size, what + " (verify at reduced parameters)");
}

VFunc mm_trace_monomial(unsigned p, unsigned k, unsigned m, std::uint64_t d) {
  if (m == 0 || k % m) throw PreconditionError("mm_trace_monomial needs m | k");
  require_size(p, 2 * k, "mm_trace_monomial");
  auto F = make_field(p, k);
  auto dom = SpaceDesc::standard(p, {k, k});
  auto cod = SpaceDesc::standard(p, {m});
  SubfieldMap emb(F, make_field(p, m));
  auto tr = trace_table(emb, m);
  const Index q = F->order();
  std::vector<Index> powd(q);
  for (Index a = 0; a < q; ++a) powd[a] = F->pow(a, d);
  std::vector<std::uint32_t> v(q * q);
  for (Index x2 = 0; x2 < q; ++x2)
    for (Index x1 = 0; x1 < q; ++x1) v[x1 + q * x2] = tr[F->mul(x1, powd[x2])];
  return VFunc(dom, cod, std::move(v));
}

VFunc cor5_quadratic(unsigned p, unsigned n, unsigned m, const std::string& alpha) {
  if (p == 2) throw PreconditionError("cor5_quadratic needs odd p");
  if (m < 2 || n % m || m == n) throw PreconditionError("cor5_quadratic needs m >= 2, m | n, m != n");
  require_size(p, n, "cor5_quadratic");
  auto F = make_field(p, n);
  auto dom = SpaceDesc::standard(p, {n});
  auto cod = SpaceDesc::standard(p, {m});
  SubfieldMap emb(F, make_field(p, m));
  auto tr = trace_table(emb, m);
  const Index a = element(*F, alpha);
  if (a == 0) throw PreconditionError("cor5_quadratic needs alpha != 0");
  std::vector<std::uint32_t> v(F->order());
  for (Index x = 0; x < F->order(); ++x) v[x] = tr[F->mul(a, F->mul(x, x))];
  return VFunc(dom, cod, std::move(v));
}

VFunc cor6_composite(unsigned p, unsigned r1, unsigned r2, unsigned m, const std::vector<std::string>& alphas,
                     const std::string& beta, const std::string& gamma, const std::vector<std::string>& lcoef) {
  if (p == 2) throw PreconditionError("cor6_composite needs odd p");
  if (m < 2 || r1 % m || r2 % m) throw PreconditionError("cor6_composite needs m >= 2, m | r1, m | r2");
  require_size(p, r1 + 2 * r2, "cor6_composite");
  auto F1 = make_field(p, r1), F2 = make_field(p, r2), Fm = make_field(p, m);
  auto dom = SpaceDesc::standard(p, {r1, r2, r2});
  auto cod = SpaceDesc::standard(p, {m});
  SubfieldMap e1(F1, Fm), e2(F2, Fm);
  auto tr1 = trace_table(e1, m), tr2 = trace_table(e2, m);

  Index al[3];
  for (int j = 0; j < 3; ++j) {
    al[j] = element(*F1, alphas[j]);
    if (al[j] == 0) throw PreconditionError("cor6_composite needs nonzero alpha_j");
  }
  int eta0 = F1->quadratic_character(al[0]);
  if (F1->quadratic_character(al[1]) != eta0 || F1->quadratic_character(al[2]) != eta0) {
    throw PreconditionError("cor6_composite needs alpha_1..3 all squares or all non-squares");
  }
  const Index b = element(*F2, beta), g = element(*F2, gamma);
  if (b == 0 || g == 0) throw PreconditionError("cor6_composite needs beta, gamma nonzero");

  // L(y) = sum a_i y^{q^i}, q = p^m; must permute GF(p^{r2}).
  const Index q2 = F2->order();
  const std::uint64_t qm = ipow(p, m);
  std::vector<Index> L(q2, 0);
  {
    std::vector<Index> coef;
    for (auto& s : lcoef) coef.push_back(element(*F2, s));
    for (Index y = 0; y < q2; ++y) {
      Index acc = 0, yq = y;
      for (auto a : coef) {
        acc = F2->add(acc, F2->mul(a, yq));
        yq = F2->pow(yq, qm);
      }
      L[y] = acc;
    }
    std::set<Index> image(L.begin(), L.end());
    if (image.size() != q2) throw PreconditionError("cor6_composite: L does not permute the field");
  }

  const Index q1 = F1->order();
  std::vector<std::uint32_t> h[3];
  for (int j = 0; j < 3; ++j) {
    h[j].resize(q1);
    for (Index x = 0; x < q1; ++x) h[j][x] = tr1[F1->mul(al[j], F1->mul(x, x))];
  }
  std::vector<int> kind(q2);
  for (Index y2 = 0; y2 < q2; ++y2) {
    Index t = tr2[F2->mul(g, F2->mul(y2, y2))];
    kind[y2] = t == 0 ? 0 : (Fm->quadratic_character(t) == 1 ? 1 : 2);
  }
  std::vector<std::uint32_t> v(q1 * q2 * q2);
  for (Index y2 = 0; y2 < q2; ++y2) {
    const auto& hk = h[kind[y2]];
    const Index bl = F2->mul(b, L[y2]);
    for (Index y1 = 0; y1 < q2; ++y1) {
      const Index gval = tr2[F2->mul(y1, bl)];
      const Index base = q1 * (y1 + q2 * y2);
      for (Index x = 0; x < q1; ++x) v[base + x] = static_cast<std::uint32_t>(Fm->add(hk[x], gval));
    }
  }
  return VFunc(dom, cod, std::move(v));
}

VFunc example3(const std::string& alpha_exp) {
  auto F64 = make_field(2, 6), F16 = make_field(2, 4), F4 = make_field(2, 2);
  auto dom = SpaceDesc::standard(2, {6, 6, 4, 4});
  auto cod = SpaceDesc::standard(2, {2});
  SubfieldMap e64(F64, F4), e16(F16, F4);
  auto tr64 = trace_table(e64, 2), tr16 = trace_table(e16, 2);
  const Index alpha = element(*F16, alpha_exp);
  if (alpha == 0) throw PreconditionError("example3 needs a nonzero alpha");
  // Slices (x1, x2) in F64^2 and (x3, x4) in F16^2.
  std::vector<std::uint8_t> A(4096), B(4096), T(256), C(256);
  for (Index x2 = 0; x2 < 64; ++x2)
    for (Index x1 = 0; x1 < 64; ++x1) {
      Index m1 = F64->mul(x1, F64->pow(x2, 58));
      Index m2 = F64->mul(F64->pow(x1, 52), x2);
      A[x1 + 64 * x2] = static_cast<std::uint8_t>(tr64[F64->sub(m2, m1)]);
      B[x1 + 64 * x2] = static_cast<std::uint8_t>(tr64[m1]);
    }
  for (Index x4 = 0; x4 < 16; ++x4)
    for (Index x3 = 0; x3 < 16; ++x3) {
      Index u = F16->mul(x3, F16->pow(x4, 14));
      T[x3 + 16 * x4] = static_cast<std::uint8_t>(tr16[u]);
      C[x3 + 16 * x4] = static_cast<std::uint8_t>(tr16[F16->mul(alpha, u)]);
    }
  std::vector<std::uint32_t> v(1u << 20);
  for (Index hi = 0; hi < 256; ++hi) {
    const Index t3 = F4->pow(T[hi], 3);
    for (Index lo = 0; lo < 4096; ++lo) {
      Index val = F4->add(F4->mul(t3, A[lo]), F4->add(B[lo], C[hi]));
      v[lo + 4096 * hi] = static_cast<std::uint32_t>(val);
    }
  }
  return VFunc(dom, cod, std::move(v));
}

std::string pds_string(std::uint64_t v, long long k, long long l, long long mu) {
  std::ostringstream os;
  os << v << "," << k << "," << l << "," << mu;
  return os.str();
}

}  // namespace

ConstructionId ConstructionId::parse(const std::string& text) {
  ConstructionId id;
  auto colon = text.find(':');
  id.tag = text.substr(0, colon);
  if (colon != std::string::npos) {
    for (auto& kv : split(text.substr(colon + 1), ';')) {
      if (kv.empty()) continue;
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw PreconditionError("construction parameter without '=': " + kv);
      id.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
  }
  return id;
}

std::string ConstructionId::to_string() const {
  std::string s = tag;
  char sep = ':';
  for (auto& [k, v] : params) {
    s += sep + k + "=" + v;
    sep = ';';
  }
  return s;
}

ConstructionId example_id(int k) {
  switch (k) {
    case 1: return {"example1", {}};
    case 2: return {"example2", {}};
    case 3: return {"example3", {}};
    case 4: return {"example4", {}};
    case 5: return {"example5", {}};
  }
  throw PreconditionError("no such example");
}

ConstructionId example5_reduced_id() {
  return {"cor6_composite",
          {{"p", "5"}, {"r1", "2"}, {"r2", "2"}, {"m", "2"}, {"alpha1", "0"}, {"alpha2", "2"}, {"alpha3", "2"},
           {"beta", "0"}, {"gamma", "0"}, {"L", "0"}}};
}

VFunc instantiate(const ConstructionId& id) {
  Params P(id);
  if (id.tag == "example1") return mm_trace_monomial(2, 6, 2, 58);
  if (id.tag == "example2") return mm_trace_monomial(3, 6, 2, 717);
  if (id.tag == "example3") return example3(P.str("alpha", "1"));
  if (id.tag == "example4") return cor5_quadratic(3, 6, 2, "0");
  if (id.tag == "example5") return cor6_composite(5, 9, 9, 3, {"0", "2", "2"}, "0", "0", {"0"});
  if (id.tag == "mm_trace_monomial") return mm_trace_monomial(P.uint("p"), P.uint("k"), P.uint("m"), P.uint("d"));
  if (id.tag == "cor5_quadratic") return cor5_quadratic(P.uint("p"), P.uint("n"), P.uint("m"), P.str("alpha", "0"));
  if (id.tag == "cor6_composite") {
    return cor6_composite(P.uint("p"), P.uint("r1"), P.uint("r2"), P.uint("m"),
                          {P.str("alpha1", "0"), P.str("alpha2", "0"), P.str("alpha3", "0")}, P.str("beta", "0"),
                          P.str("gamma", "0"), split(P.str("L", "0"), ','));
  }
  throw PreconditionError("unknown construction tag '" + id.tag + "'");
}

PropertySheet expected_properties(const ConstructionId& id) {
  PropertySheet s;
  s.feasibility = "verify_full";
  auto& e = s.expectations;
  Params P(id);
  if (id.tag == "example1") {
    e["condition_a"] = "true";
    e["eps"] = "+1";
    e["hadamard_factor"] = "64";
    e["pds_zero_class"] = pds_string(4096, 1071, 302, 272);
    e["pds_other_classes"] = pds_string(4096, 1008, 272, 240);
    e["scheme_classes"] = "4";
    e["scheme_typing"] = "latin";
    e["code_zero_class"] = "1071:512,544";
    e["code_other_classes"] = "1008:480,512";
  } else if (id.tag == "example2") {
    e["condition_a"] = "true";
    e["eps"] = "+1";
    e["hadamard_factor"] = "729";
  } else if (id.tag == "example3") {
    e["condition_a"] = "true";
    e["eps"] = "+1";
    e["bent_partition"] = "true";
    e["spectrum"] = "-256,768";
  } else if (id.tag == "example4") {
    e["vectorial_dual_bent"] = "true";
    e["scheme_classes"] = "9";
    e["fiber_condition"] = "true";
  } else if (id.tag == "example5") {
    s.feasibility = "verify_reduced_only";
    e["scheme_classes"] = "125";
    e["vectorial_dual_bent"] = "true";
  } else if (id.tag == "cor5_quadratic") {
    unsigned p = P.uint("p"), n = P.uint("n"), m = P.uint("m");
    auto F = make_field(p, n);
    int eta = F->quadratic_character(element(*F, P.str("alpha", "0")));
    // xi^n for n even: 1 when p = 1 mod 4, (-1)^{n/2} when p = 3 mod 4
    bool exceptional = false;
    if (n % 2 == 0 && 2 * m == n) {
      int xin = (p % 4 == 1) ? 1 : ((n / 2) % 2 ? -1 : 1);
      exceptional = eta == xin;
    }
    std::uint64_t pm = ipow(p, m);
    e["vectorial_dual_bent"] = "true";
    e["scheme_classes"] = std::to_string(exceptional ? pm - 1 : pm);
    e["fiber_condition"] = "true";
    if (ipow(p, n) > guard_limit(Guard::FastWalsh)) s.feasibility = "verify_reduced_only";
  } else if (id.tag == "cor6_composite") {
    unsigned p = P.uint("p"), r1 = P.uint("r1"), r2 = P.uint("r2"), m = P.uint("m");
    e["vectorial_dual_bent"] = "true";
    e["scheme_classes"] = std::to_string(ipow(p, m));
    e["fiber_condition"] = "true";
    if (r1 + 2 * r2 > 40 || ipow(p, r1 + 2 * r2) > guard_limit(Guard::FastWalsh)) s.feasibility = "verify_reduced_only";
  } else if (id.tag == "mm_trace_monomial") {
    unsigned p = P.uint("p"), k = P.uint("k");
    if (ipow(p, 2 * k) > guard_limit(Guard::FastWalsh)) s.feasibility = "verify_reduced_only";
  } else {
    throw PreconditionError("unknown construction tag '" + id.tag + "'");
  }
  return s;
}

}  // namespace dualbent
