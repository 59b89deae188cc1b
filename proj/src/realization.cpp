#include "ty/realization.hpp"

#include <map>

namespace ty {

namespace {

bool is_zero(const Mat& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!m.data()[i].is_zero()) return false;
  return true;
}

bool same(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a.data()[i] != b.data()[i]) return false;
  return true;
}

Mat eye(int d) {
  Mat m = Mat::Constant(d, d, Cyclo(0));
  for (int i = 0; i < d; ++i) m(i, i) = Cyclo(1);
  return m;
}

bool is_eye(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i == j ? !m(i, j).is_one() : !m(i, j).is_zero()) return false;
  return true;
}

// Exact products are expensive; skip identities and zero entries.
Mat product(const Mat& a, const Mat& b) {
  if (is_eye(a)) return b;
  if (is_eye(b)) return a;
  Mat out = Mat::Constant(a.rows(), b.cols(), Cyclo(0));
  for (Eigen::Index k = 0; k < a.cols(); ++k)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

void accumulate(Morphism& f, int i, int j, const Mat& m) {
  auto it = f.blocks.find({i, j});
  if (it == f.blocks.end()) f.blocks.emplace(std::make_pair(i, j), m);
  else it->second += m;
}

void prune(Morphism& f) {
  for (auto it = f.blocks.begin(); it != f.blocks.end();)
    it = is_zero(it->second) ? f.blocks.erase(it) : std::next(it);
}

Quat qcj(const Quat& q, int k) { return (k & 1) ? quat_conj(q) : q; }

}  // namespace

bool operator==(const Morphism& f, const Morphism& g) {
  if (f.src != g.src || f.tgt != g.tgt || f.blocks.size() != g.blocks.size()) return false;
  for (const auto& [k, m] : f.blocks) {
    auto it = g.blocks.find(k);
    if (it == g.blocks.end() || !same(m, it->second)) return false;
  }
  return true;
}

Morphism operator+(const Morphism& f, const Morphism& g) {
  if (f.src != g.src || f.tgt != g.tgt) throw RealizationError("adding morphisms between different objects");
  Morphism out = f;
  for (const auto& [k, m] : g.blocks) accumulate(out, k.first, k.second, m);
  prune(out);
  return out;
}

Morphism operator*(const Cyclo& c, const Morphism& f) {
  Morphism out{f.src, f.tgt, {}};
  if (c.is_zero()) return out;
  for (const auto& [k, m] : f.blocks) {
    Mat s = m;
    for (Eigen::Index i = 0; i < s.size(); ++i) s.data()[i] *= c;
    out.blocks.emplace(k, std::move(s));
  }
  return out;
}

RealizedCategory::RealizedCategory(const CoeffTable& t) : t_(t), n_(t.n()) {
  switch (t.kase) {
    case Case::Split:
    case Case::ComplexGalois: S_ = {Quat::unit(0)}; break;
    case Case::RealComplex: S_ = {Quat::unit(0), Quat::unit(1)}; break;
    case Case::Quaternionic: S_ = {Quat::unit(0), Quat::unit(1), Quat::unit(2), Quat::unit(3)}; break;
  }
  const int r = n_ + 1;
  simple_.reserve(static_cast<size_t>(r) * r * r);
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z = 0; z < r; ++z) simple_.push_back(build_simple(x, y, z));
}

int RealizedCategory::end_dim(int x) const {
  if (x == n_) return kase() == Case::Quaternionic ? 4 : kase() == Case::Split ? 1 : 2;
  return kase() == Case::ComplexGalois ? 2 : 1;
}

int RealizedCategory::deg(int x) const {
  return kase() == Case::RealComplex && x < n_ ? group().deg(x) : 0;
}

Quat RealizedCategory::coeff(const Cyclo& v) const {
  if (kase() == Case::ComplexGalois || kase() == Case::RealComplex) return Quat::from_complex(v);
  // Split simples have End = the field of the table itself.
  if (kase() == Case::Quaternionic && !v.is_real()) throw RealizationError("coefficient " + v.str() + " is not real");
  return Quat(v);
}

Mat RealizedCategory::end_matrix(int x, const Quat& e) const {
  const int d = end_dim(x);
  if (d == 1) return Mat::Constant(1, 1, e.w);
  if (d == 2) {
    Mat m(2, 2);
    m << e.w, -e.x, e.x, e.w;
    return m;
  }
  Mat m(4, 4);
  for (int k = 0; k < 4; ++k) {
    Quat c = e * Quat::unit(k);
    m(0, k) = c.w, m(1, k) = c.x, m(2, k) = c.y, m(3, k) = c.z;
  }
  return m;
}

Quat RealizedCategory::end_element(int x, const Mat& b) const {
  const int d = end_dim(x);
  if (b.rows() != d || b.cols() != d) throw RealizationError("block size does not match End(x)");
  if (d == 1) return Quat(b(0, 0));
  if (d == 2) return Quat(b(0, 0), b(1, 0));
  return Quat(b(0, 0), b(1, 0), b(2, 0), b(3, 0));
}

Morphism RealizedCategory::end_morphism(int x, const Quat& e) const {
  Morphism f{{x}, {x}, {}};
  Mat m = end_matrix(x, e);
  if (!is_zero(m)) f.blocks.emplace(std::make_pair(0, 0), std::move(m));
  return f;
}

Obj RealizedCategory::decompose(int x, int y) const {
  if (x < n_ && y < n_) return {group().mul(x, y)};
  if (x < n_ || y < n_) return {n_};
  Obj out;
  for (int b = 0; b < n_; ++b)
    for (size_t s = 0; s < S_.size(); ++s) out.push_back(b);
  return out;
}

std::vector<std::array<int, 3>> RealizedCategory::tensor_labels(const Obj& X, const Obj& Y) const {
  std::vector<std::array<int, 3>> lab;
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = 0; j < Y.size(); ++j) {
      const int k = static_cast<int>(decompose(X[i], Y[j]).size());
      for (int q = 0; q < k; ++q) lab.push_back({static_cast<int>(i), static_cast<int>(j), q});
    }
  return lab;
}

Obj RealizedCategory::tensor(const Obj& X, const Obj& Y) const {
  Obj out;
  for (int x : X)
    for (int y : Y)
      for (int z : decompose(x, y)) out.push_back(z);
  return out;
}

Morphism RealizedCategory::identity(const Obj& X) const {
  Morphism f{X, X, {}};
  for (size_t i = 0; i < X.size(); ++i)
    f.blocks.emplace(std::make_pair(static_cast<int>(i), static_cast<int>(i)), eye(end_dim(X[i])));
  return f;
}

Morphism RealizedCategory::compose(const Morphism& f, const Morphism& g) const {
  if (f.src != g.tgt) throw RealizationError("composing morphisms with mismatched objects");
  std::vector<std::vector<std::pair<int, const Mat*>>> by_src(f.src.size());
  for (const auto& [k, m] : f.blocks) by_src[k.second].push_back({k.first, &m});
  Morphism out{g.src, f.tgt, {}};
  for (const auto& [k, m] : g.blocks)
    for (const auto& [i, fm] : by_src[k.first]) accumulate(out, i, k.second, product(*fm, m));
  prune(out);
  return out;
}

Morphism RealizedCategory::mm_action(const Quat& e, bool left) const {
  Obj mm = decompose(n_, n_);
  Morphism f{mm, mm, {}};
  const int k = static_cast<int>(S_.size());
  for (int b = 0; b < n_; ++b) {
    if (kase() == Case::ComplexGalois || kase() == Case::Split) {
      Mat m = kase() == Case::Split ? Mat::Constant(1, 1, e.w) : end_matrix(b, left ? e : quat_conj(e));
      if (!is_zero(m)) f.blocks.emplace(std::make_pair(b, b), std::move(m));
      continue;
    }
    const Quat z = kase() == Case::Quaternionic ? quat_conj(e) : qcj(e, t_.g() + deg(b));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Cyclo v = left ? quat_re(z * S_[i] * quat_conj(S_[j])) : quat_re(S_[i] * e * quat_conj(S_[j]));
        if (!v.is_zero()) f.blocks.emplace(std::make_pair(b * k + i, b * k + j), Mat::Constant(1, 1, v));
      }
  }
  return f;
}

Morphism RealizedCategory::left_action(int x, int y, const Quat& e) const {
  Obj d = decompose(x, y);
  auto one = [&](int z, const Quat& v) {
    Morphism f{d, d, {}};
    Mat m = end_matrix(z, v);
    if (!is_zero(m)) f.blocks.emplace(std::make_pair(0, 0), std::move(m));
    return f;
  };
  if (x < n_ && y < n_) return one(d[0], e);
  if (x < n_) return one(n_, kase() == Case::ComplexGalois ? e : Quat(e.w));
  if (y < n_) return one(n_, kase() == Case::RealComplex ? qcj(e, deg(y)) : e);
  return mm_action(e, true);
}

Morphism RealizedCategory::right_action(int x, int y, const Quat& e) const {
  Obj d = decompose(x, y);
  auto one = [&](int z, const Quat& v) {
    Morphism f{d, d, {}};
    Mat m = end_matrix(z, v);
    if (!is_zero(m)) f.blocks.emplace(std::make_pair(0, 0), std::move(m));
    return f;
  };
  if (x < n_ && y < n_) return one(d[0], e);
  if (x < n_) return one(n_, kase() == Case::RealComplex ? qcj(e, deg(x)) : e);
  if (y < n_) return one(n_, kase() == Case::ComplexGalois ? quat_conj(e) : Quat(e.w));
  return mm_action(e, false);
}

Morphism RealizedCategory::tensor(const Morphism& f, const Morphism& g) const {
  auto offsets = [&](const Obj& X, const Obj& Y) {
    std::vector<std::vector<int>> off(X.size(), std::vector<int>(Y.size()));
    int o = 0;
    for (size_t i = 0; i < X.size(); ++i)
      for (size_t j = 0; j < Y.size(); ++j) {
        off[i][j] = o;
        o += static_cast<int>(decompose(X[i], Y[j]).size());
      }
    return off;
  };
  const auto os = offsets(f.src, g.src), ot = offsets(f.tgt, g.tgt);
  Morphism out{tensor(f.src, g.src), tensor(f.tgt, g.tgt), {}};
  for (const auto& [kf, F] : f.blocks) {
    const int x = f.src[kf.second];
    const Quat fe = end_element(x, F);
    const bool f_one = is_eye(F);
    for (const auto& [kg, G] : g.blocks) {
      const int y = g.src[kg.second];
      const bool g_one = is_eye(G);
      Morphism local = f_one && g_one ? identity(decompose(x, y))
                       : f_one        ? right_action(x, y, end_element(y, G))
                       : g_one        ? left_action(x, y, fe)
                                      : compose(left_action(x, y, fe), right_action(x, y, end_element(y, G)));
      const int t0 = ot[kf.first][kg.first], s0 = os[kf.second][kg.second];
      for (const auto& [kl, L] : local.blocks) accumulate(out, t0 + kl.first, s0 + kl.second, L);
    }
  }
  prune(out);
  return out;
}

// alpha_{x,y,z} on simple summands, read from the coefficient table.  Summands
// of (x y) z are labelled (q, r): q indexes x.y, r indexes u.z for the q-th u;
// likewise (q, r) for x (y z) with q indexing y.z.
RealizedCategory::Simple RealizedCategory::build_simple(int x, int y, int z) const {
  Simple s;
  Obj src, tgt;
  {
    Obj xy = decompose(x, y);
    for (size_t q = 0; q < xy.size(); ++q) {
      Obj uz = decompose(xy[q], z);
      for (size_t r = 0; r < uz.size(); ++r) {
        src.push_back(uz[r]);
        s.src_lab.push_back({static_cast<int>(q), static_cast<int>(r)});
      }
    }
    Obj yz = decompose(y, z);
    for (size_t q = 0; q < yz.size(); ++q) {
      Obj xu = decompose(x, yz[q]);
      for (size_t r = 0; r < xu.size(); ++r) {
        tgt.push_back(xu[r]);
        s.tgt_lab.push_back({static_cast<int>(q), static_cast<int>(r)});
      }
    }
  }
  Morphism& f = s.mor;
  f.src = src, f.tgt = tgt;
  auto put = [&](int i, int j, const Quat& e) {
    Mat m = end_matrix(tgt[i], e);
    if (!is_zero(m)) f.blocks[{i, j}] = std::move(m);
  };
  const int m = n_, k = static_cast<int>(S_.size());
  const Case c = kase();
  auto rc_cj = [&](const Cyclo& v, int e) { return c == Case::RealComplex ? cj(v, e) : v; };
  // beta-type blocks: be times s conj(t) by real part, per case.
  auto beta_block = [&](const Cyclo& be, const Quat& s, int ti, int si) {
    if (c == Case::ComplexGalois) return Quat::from_complex(be.conj());
    if (c == Case::Quaternionic) return Quat(si == ti ? be : Cyclo(0));
    return Quat(quat_re(coeff(be) * s * quat_conj(S_[ti])));
  };

  if (x < m && y < m && z < m) {
    put(0, 0, coeff(t_.alpha(x, y, z)));
  } else if (x < m && y < m) {
    put(0, 0, coeff(rc_cj(t_.alpha3(x, y), deg(x) + deg(y))));
  } else if (x < m && z < m) {
    put(0, 0, coeff(rc_cj(t_.alpha2(x, z), deg(x) + deg(z))));
  } else if (y < m && z < m) {
    put(0, 0, coeff(rc_cj(t_.alpha1(y, z), deg(y) + deg(z))));
  } else if (x < m) {  // (a, m, m)
    const int a = x;
    for (size_t bi = 0; bi < src.size(); ++bi) {
      const int b = src[bi], ts = s.src_lab[bi].second % k;
      for (size_t ai = 0; ai < tgt.size(); ++ai) {
        if (tgt[ai] != b) continue;
        const int si = s.tgt_lab[ai].first % k;
        put(static_cast<int>(ai), static_cast<int>(bi), beta_block(t_.beta1(a, b), S_[si], ts, si));
      }
    }
  } else if (y < m) {  // (m, a, m)
    const int a = y;
    for (size_t bi = 0; bi < src.size(); ++bi) {
      const int b = src[bi], ts = s.src_lab[bi].second % k;
      for (size_t ai = 0; ai < tgt.size(); ++ai) {
        if (tgt[ai] != b) continue;
        const int si = s.tgt_lab[ai].second % k;
        put(static_cast<int>(ai), static_cast<int>(bi), beta_block(t_.beta2(a, b), qcj(S_[si], deg(a)), ts, si));
      }
    }
  } else if (z < m) {  // (m, m, a)
    const int a = z;
    for (size_t bi = 0; bi < src.size(); ++bi) {
      const int b = src[bi], ts = s.src_lab[bi].first % k;
      for (size_t ai = 0; ai < tgt.size(); ++ai) {
        if (tgt[ai] != b) continue;
        const int si = s.tgt_lab[ai].second % k;
        put(static_cast<int>(ai), static_cast<int>(bi), beta_block(t_.beta3(a, b), qcj(S_[si], deg(a)), ts, si));
      }
    }
  } else {  // (m, m, m)
    for (size_t bi = 0; bi < src.size(); ++bi) {
      const int q = s.src_lab[bi].first, b = q / k, si = q % k;
      for (size_t ai = 0; ai < tgt.size(); ++ai) {
        const int qp = s.tgt_lab[ai].first, a = qp / k, ri = qp % k;
        Quat e;
        switch (c) {
          case Case::Split:
          case Case::ComplexGalois: e = coeff(t_.gamma(a, b)); break;
          case Case::Quaternionic: e = coeff(t_.gamma(a, b)) * (S_[si] * S_[ri]); break;
          case Case::RealComplex: {
            const Cyclo& gs = si == 0 ? t_.gamma(a, b) : t_.gamma_i(a, b);
            e = qcj(coeff(gs) * S_[ri], deg(b));
            break;
          }
        }
        put(static_cast<int>(ai), static_cast<int>(bi), e);
      }
    }
  }
  return s;
}

const Morphism& RealizedCategory::tetrahedral(int x, int y, int z) const {
  const int r = n_ + 1;
  return simple_.at((static_cast<size_t>(x) * r + y) * r + z).mor;
}

Morphism RealizedCategory::associator(const Obj& X, const Obj& Y, const Obj& Z) const {
  // Simple summands are laid out in the same order as tensor() lays them out.
  if (X.size() == 1 && Y.size() == 1 && Z.size() == 1) return tetrahedral(X[0], Y[0], Z[0]);
  const Obj XY = tensor(X, Y), YZ = tensor(Y, Z);
  const auto lxy = tensor_labels(X, Y), lyz = tensor_labels(Y, Z);
  const auto lsrc = tensor_labels(XY, Z), ltgt = tensor_labels(X, YZ);
  using Key = std::array<int, 5>;  // i, j, k, q, r
  std::map<Key, int> sidx, tidx;
  for (size_t p = 0; p < lsrc.size(); ++p) {
    const auto& [u, kk, r] = lsrc[p];
    const auto& [i, j, q] = lxy[u];
    sidx[{i, j, kk, q, r}] = static_cast<int>(p);
  }
  for (size_t p = 0; p < ltgt.size(); ++p) {
    const auto& [i, v, r] = ltgt[p];
    const auto& [j, kk, q] = lyz[v];
    tidx[{i, j, kk, q, r}] = static_cast<int>(p);
  }
  Morphism out{tensor(XY, Z), tensor(X, YZ), {}};
  const int R = n_ + 1;
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = 0; j < Y.size(); ++j)
      for (size_t kk = 0; kk < Z.size(); ++kk) {
        const Simple& s = simple_[(static_cast<size_t>(X[i]) * R + Y[j]) * R + Z[kk]];
        const int I = static_cast<int>(i), J = static_cast<int>(j), K = static_cast<int>(kk);
        for (const auto& [key, m] : s.mor.blocks) {
          const auto& [qp, rp] = s.tgt_lab[key.first];
          const auto& [q, r] = s.src_lab[key.second];
          out.blocks[{tidx.at({I, J, K, qp, rp}), sidx.at({I, J, K, q, r})}] = m;
        }
      }
  return out;
}

Morphism RealizedCategory::projection(int a) const {
  const int k = static_cast<int>(S_.size());
  Morphism f{decompose(n_, n_), {a}, {}};
  f.blocks.emplace(std::make_pair(0, a * k), eye(end_dim(a)));
  return f;
}

Morphism RealizedCategory::inclusion(int a, int s) const {
  const int k = static_cast<int>(S_.size());
  Morphism f{{a}, decompose(n_, n_), {}};
  f.blocks.emplace(std::make_pair(a * k + s, 0), eye(end_dim(a)));
  return f;
}

Mat RealizedCategory::dense(const Morphism& f) const {
  auto offsets = [&](const Obj& X) {
    std::vector<int> o{0};
    for (int x : X) o.push_back(o.back() + end_dim(x));
    return o;
  };
  const auto os = offsets(f.src), ot = offsets(f.tgt);
  Mat out = Mat::Constant(ot.back(), os.back(), Cyclo(0));
  for (const auto& [k, m] : f.blocks) out.block(ot[k.first], os[k.second], m.rows(), m.cols()) = m;
  return out;
}

RealizedCategory realize(const TYData& d) { return RealizedCategory(build(d)); }

PentagonReport pentagon_matrix_check(const RealizedCategory& rc) {
  PentagonReport rep;
  rep.kase = rc.kase();
  const int r = rc.m() + 1;
  for (int W = 0; W < r; ++W)
    for (int X = 0; X < r; ++X)
      for (int Y = 0; Y < r; ++Y)
        for (int Z = 0; Z < r; ++Z) {
          const Obj w{W}, x{X}, y{Y}, z{Z};
          const Obj wx = rc.tensor(w, x), xy = rc.tensor(x, y), yz = rc.tensor(y, z);
          // ((WX)Y)Z -> (WX)(YZ) -> W(X(YZ))
          Morphism lhs = rc.compose(rc.associator(w, x, yz), rc.associator(wx, y, z));
          // ((WX)Y)Z -> (W(XY))Z -> W((XY)Z) -> W(X(YZ))
          Morphism b1 = rc.tensor(rc.associator(w, x, y), rc.identity(z));
          Morphism b2 = rc.associator(w, xy, z);
          Morphism b3 = rc.tensor(rc.identity(w), rc.associator(x, y, z));
          Morphism rhs = rc.compose(b3, rc.compose(b2, b1));
          if (!(lhs == rhs)) {
            int diff = 0;
            for (const auto& [k, m] : lhs.blocks) {
              auto it = rhs.blocks.find(k);
              if (it == rhs.blocks.end() || !same(m, it->second)) ++diff;
            }
            for (const auto& [k, m] : rhs.blocks)
              if (!lhs.blocks.count(k)) ++diff;
            rep.violations.push_back({"pentagon", {W, X, Y, Z}, std::to_string(diff) + " blocks differ", ""});
          }
        }
  return rep;
}

Morphism adjoint(const RealizedCategory& rc, int a) {
  if (rc.kase() == Case::ComplexGalois) return rc.inclusion(a);
  const auto& S = rc.S();
  const int m = rc.m();
  Morphism split = rc.inclusion(a, 0);
  for (size_t s = 1; s < S.size(); ++s) split = split + rc.inclusion(a, static_cast<int>(s));
  const Morphism proj = rc.projection(a);
  auto T = [&](const Quat& e) {
    Morphism v = rc.compose(proj, rc.compose(rc.right_action(m, m, e), split));
    auto it = v.blocks.find({0, 0});
    return it == v.blocks.end() ? Cyclo(0) : it->second(0, 0);
  };
  Cyclo norm(0);
  Morphism sum{{a}, split.tgt, {}};
  for (const auto& s : S) {
    const Cyclo ts = T(s);
    norm += ts * ts;
    sum = sum + ts * rc.compose(rc.right_action(m, m, s), split);
  }
  return norm.inverse() * sum;
}

CheckReport adjoint_check(const RealizedCategory& rc) {
  CheckReport rep;
  const int m = rc.m();
  const auto& S = rc.S();
  Morphism resolution{rc.decompose(m, m), rc.decompose(m, m), {}};
  for (int a = 0; a < m; ++a) {
    const Morphism dag = adjoint(rc, a), proj = rc.projection(a);
    std::vector<Quat> hs = S;
    Quat all;
    for (const auto& s : S) all += s;
    hs.push_back(all);
    if (rc.kase() == Case::ComplexGalois) hs = {Quat::unit(0)};
    for (const auto& h : hs) {
      Morphism l = rc.compose(proj, rc.compose(rc.right_action(m, m, h), dag));
      if (!(l == quat_re(h) * rc.identity({a})))
        rep.failures.push_back("[a](id (x) h)[a]^dagger != Re(h) id_a at a = " + rc.group().label(a) + ", h = " + h.str());
    }
    for (const auto& s : S)
      resolution = resolution + rc.compose(rc.right_action(m, m, quat_conj(s)),
                                           rc.compose(dag, rc.compose(proj, rc.right_action(m, m, s))));
  }
  if (!(resolution == rc.identity(rc.decompose(m, m))))
    rep.failures.push_back("sum of (id (x) s-bar)[a]^dagger[a](id (x) s) is not the identity of m (x) m");
  return rep;
}

namespace {

// Blockwise complex conjugation of End(m)-valued blocks.
Morphism conj_blocks(const RealizedCategory& rc, const Morphism& f) {
  Morphism out{f.src, f.tgt, {}};
  for (const auto& [k, b] : f.blocks) {
    const int x = f.src[k.second];
    out.blocks.emplace(k, rc.end_matrix(x, quat_conj(rc.end_element(x, b))));
  }
  return out;
}

Cyclo rc_tau(const TYData& d) { return effective_tau(d); }

}  // namespace

Morphism closed_form_alpha_inverse(const RealizedCategory& rc, const TYData& d) {
  const int m = rc.m(), n = m;
  const Obj M{m};
  const Morphism Im = rc.identity(M);
  const Cyclo tau = rc_tau(d);
  const auto& S = rc.S();
  switch (rc.kase()) {
    case Case::ComplexGalois:
      return rc.tetrahedral(m, m, m);
    case Case::Split:
    case Case::Quaternionic: {
      // tau sum chi(a,b) ((id (x) s-bar) (x) t-bar)([b]^dagger (x) id)(id (x) [a])(s-bar (x) (id (x) t))
      Morphism out{rc.tensor(M, rc.decompose(m, m)), rc.tensor(rc.decompose(m, m), M), {}};
      for (int a = 0; a < n; ++a) {
        const Morphism f2 = rc.tensor(Im, rc.projection(a));
        for (int b = 0; b < n; ++b) {
          const Morphism f3 = rc.tensor(adjoint(rc, b), Im);
          const Morphism mid = rc.compose(f3, f2);
          for (const auto& s : S)
            for (const auto& t : S) {
              Morphism f1 = rc.tensor(rc.end_morphism(m, quat_conj(s)), rc.right_action(m, m, t));
              Morphism f4 = rc.tensor(rc.right_action(m, m, quat_conj(s)), rc.end_morphism(m, quat_conj(t)));
              out = out + (tau * d.chi(a, b)) * rc.compose(f4, rc.compose(mid, f1));
            }
        }
      }
      return out;
    }
    case Case::RealComplex: {
      // sum (iota_{a,t} (x) 1)(s-bar^a t^{gab} tau chi(b,a)^g)(1 (x) pi_{b,s}), with
      // chi read as chi-bar^{g+1} under the blockwise conjugation (see below)
      const Group& G = rc.group();
      const int g = d.g_conj ? 1 : 0;
      Morphism out{rc.tensor(M, rc.decompose(m, m)), rc.tensor(rc.decompose(m, m), M), {}};
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (const auto& s : S)
            for (const auto& t : S) {
              const Quat lam = qcj(quat_conj(s), G.deg(a)) * qcj(t, g + G.deg(a) + G.deg(b)) *
                               Quat::from_complex(tau * cj(d.chi(b, a), g + 1));
              Morphism pi = rc.compose(rc.projection(b), rc.right_action(m, m, quat_conj(s)));
              Morphism iota = rc.compose(rc.right_action(m, m, t), adjoint(rc, a));
              Morphism term = rc.compose(rc.tensor(iota, Im), rc.compose(rc.end_morphism(m, lam), rc.tensor(Im, pi)));
              out = out + term;
            }
      return conj_blocks(rc, out);
    }
  }
  throw RealizationError("unknown case");
}

namespace {

// Closed-form alpha_{m,m,m} for real-complex data, in the same convention as
// the closed-form inverse:
// sum (1 (x) iota_{a,t})(s-bar^{gab} t^b tau / chi(a,b)^g)(pi_{b,s} (x) 1).
// Under the blockwise conjugation the chi factor of both closed forms enters
// as chi-bar^{g+1}; this only matters for g = id and complex chi.
Morphism closed_form_alpha_rc(const RealizedCategory& rc, const TYData& d) {
  const int m = rc.m(), n = m;
  const Obj M{m};
  const Morphism Im = rc.identity(M);
  const Group& G = rc.group();
  const int g = d.g_conj ? 1 : 0;
  const Cyclo tau = rc_tau(d);
  Morphism out{rc.tensor(rc.decompose(m, m), M), rc.tensor(M, rc.decompose(m, m)), {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& s : rc.S())
        for (const auto& t : rc.S()) {
          const Quat lam = qcj(quat_conj(s), g + G.deg(a) + G.deg(b)) * qcj(t, G.deg(b)) *
                           Quat::from_complex(tau / cj(d.chi(a, b), g + 1));
          Morphism pi = rc.compose(rc.projection(b), rc.right_action(m, m, quat_conj(s)));
          Morphism iota = rc.compose(rc.right_action(m, m, t), adjoint(rc, a));
          out = out + rc.compose(rc.tensor(Im, iota), rc.compose(rc.end_morphism(m, lam), rc.tensor(pi, Im)));
        }
  return conj_blocks(rc, out);
}

}  // namespace

CheckReport rigidity_check(const RealizedCategory& rc, const TYData& d) {
  CheckReport rep;
  const int m = rc.m(), e = rc.unit();
  const Obj M{m}, E{e}, MM = rc.decompose(m, m);
  const Morphism Im = rc.identity(M);
  const Morphism alpha = rc.associator(M, M, M);
  const Morphism inv = closed_form_alpha_inverse(rc, d);

  if (rc.kase() == Case::RealComplex && !(closed_form_alpha_rc(rc, d) == alpha))
    rep.failures.push_back("closed-form alpha_{m,m,m} does not match the realized associator");
  if (!(rc.compose(alpha, inv) == rc.identity(alpha.tgt)))
    rep.failures.push_back("alpha_{m,m,m} alpha^{-1} != id");
  if (!(rc.compose(inv, alpha) == rc.identity(alpha.src)))
    rep.failures.push_back("alpha^{-1} alpha_{m,m,m} != id");
  if (rc.kase() == Case::ComplexGalois && !(rc.compose(alpha, alpha) == rc.identity(alpha.src)))
    rep.failures.push_back("alpha_{m,m,m}^2 != id");

  // ev_m = [1], coev_m = tau^{-1} [1]^dagger.
  const Morphism ev = rc.projection(e);
  const Morphism coev = effective_tau(d).inverse() * adjoint(rc, e);
  Morphism s1 = rc.compose(rc.tensor(ev, Im), rc.compose(inv, rc.tensor(Im, coev)));
  Morphism s2 = rc.compose(rc.tensor(Im, ev), rc.compose(alpha, rc.tensor(coev, Im)));
  if (!(s1 == Im)) rep.failures.push_back("snake (ev (x) id) alpha^{-1} (id (x) coev) != id_m");
  if (!(s2 == Im)) rep.failures.push_back("snake (id (x) ev) alpha (coev (x) id) != id_m");

  // Invertibles: ev_a = id, coev_a = alpha(a, a^-1, a) id; the second snake
  // then needs alpha(a, a^-1, a) alpha(a^-1, a, a^-1) = 1.
  const Group& G = rc.group();
  for (int a = 0; a < m; ++a) {
    const int ai = G.inv(a);
    const Obj A{a}, Ai{ai};
    const Morphism Ia = rc.identity(A);
    const Morphism al = rc.associator(A, Ai, A), al2 = rc.associator(Ai, A, Ai);
    auto unit_mor = [&](const Obj& src, const Obj& tgt, const Cyclo& c) {
      Morphism f{src, tgt, {}};
      Mat b = rc.end_matrix(e, rc.kase() == Case::ComplexGalois ? Quat::from_complex(c) : Quat(c));
      f.blocks.emplace(std::make_pair(0, 0), b);
      return f;
    };
    const Cyclo c = rc.table().alpha(a, ai, a);
    const Morphism eva = unit_mor(rc.decompose(a, ai), E, 1);
    const Morphism coeva = unit_mor(E, rc.decompose(ai, a), c);
    // (ev (x) id_a) alpha^{-1}_{a,a^-1,a} (id_a (x) coev) = id_a
    Morphism al_inv{al.tgt, al.src, {}};
    for (const auto& [k, b] : al.blocks) {
      const Quat q = rc.end_element(al.tgt[k.first], b);
      al_inv.blocks.emplace(std::make_pair(k.second, k.first), rc.end_matrix(al.tgt[k.first], q.inverse()));
    }
    Morphism t1 = rc.compose(rc.tensor(eva, Ia), rc.compose(al_inv, rc.tensor(Ia, coeva)));
    if (!(t1 == Ia)) rep.failures.push_back("snake fails for invertible " + G.label(a));
    // (id (x) ev) alpha_{a^-1,a,a^-1} (coev (x) id) = id_{a^-1}
    const Morphism Iai = rc.identity(Ai);
    Morphism t2 = rc.compose(rc.tensor(Iai, eva), rc.compose(al2, rc.tensor(coeva, Iai)));
    if (!(t2 == Iai)) rep.failures.push_back("snake fails for invertible " + G.label(ai));
  }
  return rep;
}

CheckReport galois_grading_check(const RealizedCategory& rc) {
  if (rc.kase() != Case::ComplexGalois) throw RealizationError("Galois grading applies to complex-Galois data only");
  CheckReport rep;
  const int r = rc.m() + 1, e = rc.unit();
  const Quat i = Quat::unit(1);
  std::vector<int> deg(r, -1);
  for (int x = 0; x < r; ++x) {
    Mat l = rc.dense(rc.left_action(e, x, i)), rt = rc.dense(rc.right_action(x, e, i));
    Mat rbar = rc.dense(rc.right_action(x, e, quat_conj(i)));
    if (same(l, rt)) deg[x] = 0;
    else if (same(l, rbar)) deg[x] = 1;
    else rep.failures.push_back("simple " + std::to_string(x) + " is not Galois homogeneous");
  }
  if (!rep.ok()) return rep;
  bool faithful = false;
  for (int x = 0; x < r; ++x) faithful = faithful || deg[x] == 1;
  if (!faithful) rep.failures.push_back("grading is not faithful: every simple is Galois trivial");
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      for (int z : rc.decompose(x, y))
        if (deg[z] != (deg[x] + deg[y]) % 2)
          rep.failures.push_back("degree of a summand of " + std::to_string(x) + " (x) " + std::to_string(y) + " is not additive");
  return rep;
}

}  // namespace ty
