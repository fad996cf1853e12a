#include "pv/modcat.hpp"

#include "pv/ansatz.hpp"
#include "pv/errors.hpp"

namespace pv {

RatMatrix identity_matrix(std::size_t n) { return RatMatrix::identity(n, RatFunc(0), RatFunc(1)); }
RatMatrix zero_matrix(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols, RatFunc(0)); }

CModule::CModule(Setting setting, RatMatrix matrix) : setting_(std::move(setting)), a_(std::move(matrix)) {
  if (!a_.is_square()) throw Error(ErrorKind::PreconditionFailed, "module matrix must be square");
  if (!setting_.is_differential() && a_.rows() > 0 && a_.determinant().is_zero())
    throw Error(ErrorKind::NotDualizable, "difference module needs an invertible matrix");
}

CModule unit_object(const Setting& setting) { return trivial_module(setting, 1); }

CModule trivial_module(const Setting& setting, std::size_t dim) {
  return CModule(setting, setting.is_differential() ? zero_matrix(dim, dim) : identity_matrix(dim));
}

namespace {

void require_same_setting(const CModule& m, const CModule& n) {
  if (!m.setting().same_as(n.setting())) throw Error(ErrorKind::SettingMismatch, "modules over different settings");
}

}  // namespace

CModule tensor(const CModule& m, const CModule& n) {
  require_same_setting(m, n);
  if (m.setting().is_differential()) {
    return CModule(m.setting(), kronecker(m.matrix(), identity_matrix(n.rank())) +
                                    kronecker(identity_matrix(m.rank()), n.matrix()));
  }
  return CModule(m.setting(), kronecker(m.matrix(), n.matrix()));
}

CModule dual(const CModule& m) {
  if (m.setting().is_differential()) return CModule(m.setting(), -m.matrix().transpose());
  auto inv = m.matrix().transpose().inverse();
  if (!inv) throw Error(ErrorKind::NotDualizable, "singular difference matrix has no dual");
  return CModule(m.setting(), *inv);
}

CModule direct_sum(const CModule& m, const CModule& n) {
  require_same_setting(m, n);
  const std::size_t a = m.rank(), b = n.rank();
  RatMatrix s = zero_matrix(a + b, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) s(i, j) = m.matrix()(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) s(a + i, a + j) = n.matrix()(i, j);
  return CModule(m.setting(), std::move(s));
}

CModule rebase_module(const CModule& m, const FieldPtr& field) {
  return CModule(m.setting().rebased(field), m.matrix().map([&](const RatFunc& f) { return coerce(f, field); }));
}

ConstantsBasis constants(const CModule& m, int degree_bound) {
  if (degree_bound < 0) throw Error(ErrorKind::PreconditionFailed, "degree bound must be nonnegative");
  ConstantsBasis out;
  out.degree_bound = degree_bound;
  const std::size_t n = m.rank();
  const RatMatrix& A = m.matrix();
  const UPoly L = common_denominator(A.data());
  const UPoly D = ansatz_denominator(m.setting(), L, degree_bound);
  const int kappa = D.degree() > 0 ? degree_bound : 0;
  const int N = degree_bound + kappa * D.degree();
  out.denominator = D.pow(static_cast<unsigned>(kappa));
  out.numerator_degree = N;
  if (n == 0) return out;

  Matrix<UPoly> Ap(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Ap(i, j) = (A(i, j) * RatFunc(L)).num();

  const UPoly t = UPoly::t();
  const UPoly one(Scalar(1));
  const UPoly Dk = out.denominator;
  const std::size_t per = static_cast<std::size_t>(N) + 1;
  CoefficientSystem sys(n * per);

  if (m.setting().is_differential()) {
    const UPoly LD = L * D;
    const UPoly kLDp = L * D.derivative() * Scalar(kappa);
    UPoly te = one;
    for (int e = 0; e <= N; ++e) {
      const UPoly dte = e == 0 ? UPoly() : t.pow(static_cast<unsigned>(e - 1)) * Scalar(e);
      const UPoly diag = LD * dte - kLDp * te;
      const UPoly Dte = D * te;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t u = j * per + static_cast<std::size_t>(e);
        for (std::size_t i = 0; i < n; ++i) {
          UPoly img = -(Ap(i, j) * Dte);
          if (i == j) img += diag;
          sys.add_upoly(u, {static_cast<std::uint32_t>(i)}, img);
        }
      }
      te *= t;
    }
  } else {
    const UPoly LDk = L * Dk;
    const UPoly Dks = D.shifted(1).pow(static_cast<unsigned>(kappa));
    const UPoly t1 = t + one;
    UPoly te = one, t1e = one;
    for (int e = 0; e <= N; ++e) {
      const UPoly diag = LDk * t1e;
      const UPoly Dte = Dks * te;
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t u = j * per + static_cast<std::size_t>(e);
        for (std::size_t i = 0; i < n; ++i) {
          UPoly img = -(Ap(i, j) * Dte);
          if (i == j) img += diag;
          sys.add_upoly(u, {static_cast<std::uint32_t>(i)}, img);
        }
      }
      te *= t;
      t1e *= t1;
    }
  }

  for (const auto& kv : sys.kernel()) {
    std::vector<RatFunc> v;
    v.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> c(kv.begin() + static_cast<long>(j * per), kv.begin() + static_cast<long>((j + 1) * per));
      v.emplace_back(UPoly(std::move(c)), Dk);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

ConstantsBasis hom_space(const CModule& m, const CModule& n, int degree_bound) {
  return constants(tensor(n, dual(m)), degree_bound);
}

RatMatrix as_morphism(const std::vector<RatFunc>& vec, std::size_t rows, std::size_t cols) {
  if (vec.size() != rows * cols) throw Error(ErrorKind::PreconditionFailed, "morphism vector has the wrong length");
  RatMatrix f(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) f(i, j) = vec[i * cols + j];
  return f;
}

bool is_morphism(const CModule& m, const CModule& n, const RatMatrix& f) {
  require_same_setting(m, n);
  if (f.rows() != n.rank() || f.cols() != m.rank()) return false;
  const Setting& s = m.setting();
  const RatMatrix sf = f.map([&](const RatFunc& x) { return s.apply(x); });
  if (s.is_differential()) return sf == n.matrix() * f - f * m.matrix();
  return sf * m.matrix() == n.matrix() * f;
}

bool is_constant_vector(const CModule& m, const std::vector<RatFunc>& v) {
  if (v.size() != m.rank()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    RatFunc av;
    for (std::size_t j = 0; j < v.size(); ++j) av += m.matrix()(i, j) * v[j];
    if (m.setting().apply(v[i]) != av) return false;
  }
  return true;
}

bool epsilon_monomorphism_check(const CModule& m, const ConstantsBasis& basis) {
  if (basis.vectors.empty()) return true;
  RatMatrix cols(m.rank(), basis.vectors.size(), RatFunc(0));
  for (std::size_t c = 0; c < basis.vectors.size(); ++c) {
    if (basis.vectors[c].size() != m.rank()) return false;
    for (std::size_t i = 0; i < m.rank(); ++i) cols(i, c) = basis.vectors[c][i];
  }
  return cols.rank() == basis.vectors.size();
}

std::vector<std::vector<std::string>> matrix_strings(const RatMatrix& a) {
  std::vector<std::vector<std::string>> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i].push_back(a(i, j).to_string());
  return out;
}

}  // namespace pv
