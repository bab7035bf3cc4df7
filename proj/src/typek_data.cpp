#include "typek/typek_data.hpp"

#include "typek/disc_form.hpp"
#include "typek/exact_linalg.hpp"
#include "typek_records_json.hpp"

#include <nlohmann/json.hpp>

#include <mutex>
#include <sstream>

namespace typek {

namespace {

struct Tables {
  std::vector<TypeKRecord> records;
  std::vector<EigenvalueRow> eigenvalue_rows;
};

Int json_int(const nlohmann::json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long long>());
}

Tables parse_tables(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Tables t;
  for (const auto& rj : j.at("records")) {
    TypeKRecord r;
    r.group = rj.at("group").get<std::string>();
    r.group_order = rj.at("group_order").get<int>();
    r.symplectic = rj.at("symplectic").get<std::string>();
    r.m_expr = rj.at("m_lattice").get<std::string>();
    r.n_expr = rj.at("n_lattice").get<std::string>();
    r.fixed_expr = rj.at("fixed_lattice").get<std::string>();
    r.disc_fixed = json_int(rj.at("disc_fixed"));
    r.h11 = rj.at("h11").get<int>();
    const auto& bj = rj.at("brauer");
    r.expected.disc_fixed = r.disc_fixed;
    r.expected.disc_m = json_int(bj.at("disc_m"));
    r.expected.disc_n = json_int(bj.at("disc_n"));
    r.expected.a = bj.at("a").get<int>();
    r.expected.rank_n = bj.at("rank_n").get<int>();
    r.expected.n = bj.at("n").get<int>();
    r.expected.m = bj.at("m").get<int>();
    t.records.push_back(std::move(r));
  }
  for (const auto& ej : j.at("eigenvalue_rows")) {
    EigenvalueRow row;
    row.symplectic = ej.at("symplectic").get<std::string>();
    row.rank = ej.at("rank").get<int>();
    for (const auto& pair : ej.at("eigenvalues"))
      row.eigenvalues.entries.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    row.det = json_int(ej.at("det"));
    t.eigenvalue_rows.push_back(std::move(row));
  }
  return t;
}

// Stored values must agree with what the lattice expressions give; a fixture
// that disagrees with itself is unusable.
void validate_tables(const Tables& t) {
  for (const TypeKRecord& r : t.records) {
    Lattice fixed = parse_lattice(r.fixed_expr);
    if (iabs(disc(fixed)) != r.disc_fixed)
      throw VerificationError("record " + r.group + ": stored disc_fixed " + r.disc_fixed.str() +
                              " != recomputed " + iabs(disc(fixed)).str());
    Lattice m = parse_lattice(r.m_expr);
    Lattice n = parse_lattice(r.n_expr);
    if (m.rank() + 1 != r.h11)
      throw VerificationError("record " + r.group + ": rank(M) + 1 != h11");
    if (n.rank() != r.expected.rank_n)
      throw VerificationError("record " + r.group + ": rank(N) != stored rank");
    if (!is_even(m) || !is_even(n) || !is_even(fixed))
      throw VerificationError("record " + r.group + ": lattices must be even");
  }
  for (const EigenvalueRow& row : t.eigenvalue_rows) {
    if (row.eigenvalues.total_rank() != row.rank)
      throw VerificationError("eigenvalue row " + row.symplectic +
                              ": multiplicities do not sum to the stated rank");
  }
}

Tables& tables() {
  static Tables t = [] {
    Tables loaded = parse_tables(generated::typek_records_json);
    validate_tables(loaded);
    return loaded;
  }();
  return t;
}

}  // namespace

const std::vector<TypeKRecord>& typek_records() { return tables().records; }
const std::vector<EigenvalueRow>& eigenvalue_rows() { return tables().eigenvalue_rows; }

void load_typek_records(const std::string& json_text) {
  Tables loaded = parse_tables(json_text);
  validate_tables(loaded);
  tables() = std::move(loaded);
}

const TypeKRecord& typek_record(const std::string& group) {
  for (const TypeKRecord& r : typek_records())
    if (r.group == group) return r;
  throw Error("typek_record: unknown group '" + group + "'");
}

Lattice m_lattice(const TypeKRecord& r) { return parse_lattice(r.m_expr); }
Lattice n_lattice(const TypeKRecord& r) { return parse_lattice(r.n_expr); }
Lattice fixed_lattice(const TypeKRecord& r) { return parse_lattice(r.fixed_expr); }

QEquivalence verify_duality(const TypeKRecord& r) {
  Lattice left = direct_sum(lattice_U(), m_lattice(r));
  return q_equivalent(left, n_lattice(r));
}

std::string BrauerRow::summary() const {
  std::ostringstream os;
  os << "disc_fixed=" << disc_fixed << " disc_M=" << disc_m << " disc_N=" << disc_n << " a=" << a
     << " rank_N=" << rank_n << " n=" << n << " m=" << m;
  return os.str();
}

BrauerRow brauer_row(const TypeKRecord& r) {
  BrauerRow row;
  Lattice m = m_lattice(r), n = n_lattice(r), fixed = fixed_lattice(r);
  row.disc_fixed = iabs(disc(fixed));
  row.disc_m = iabs(disc(m));
  row.disc_n = iabs(disc(n));
  Rat ratio = make_rat(row.disc_m * row.disc_n, row.disc_fixed);
  if (den(ratio) != 1)
    throw VerificationError("brauer_row " + r.group + ": discriminant ratio is not integral");
  Int ratio_int = num(ratio);
  // The ratio must be 4^a.
  int a2 = 0;
  while (ratio_int % 2 == 0) {
    ratio_int /= 2;
    ++a2;
  }
  if (ratio_int != 1 || a2 % 2 != 0)
    throw VerificationError("brauer_row " + r.group + ": disc_M * disc_N / disc_fixed = " +
                            num(ratio).str() + " is not a power of 4");
  row.a = a2 / 2;
  row.rank_n = static_cast<int>(n.rank());
  row.n = row.rank_n - row.a;
  if (row.n < 0) throw VerificationError("brauer_row " + r.group + ": negative n");
  row.m = row.n - 1;
  if (!(row == r.expected))
    throw VerificationError("brauer_row " + r.group + ": computed row {" + row.summary() +
                            "} != stored row {" + r.expected.summary() + "}");
  return row;
}

Rat c2_coefficient(const TypeKRecord& r) { return make_rat(Int(24), Int(r.group_order)); }

namespace {

Int pairing(const Lattice& l, const IVec& x, const IVec& y) {
  if (x.size() != l.rank() || y.size() != l.rank())
    throw Error("pairing: vector length must equal the lattice rank");
  return (x.transpose() * l.gram() * y)(0, 0);
}

}  // namespace

Int mu_cubic(const Lattice& m, const IVec& x, const Int& a, const IVec& y, const Int& b,
             const IVec& z, const Int& c) {
  return a * pairing(m, y, z) + b * pairing(m, x, z) + c * pairing(m, x, y);
}

Int mu_type_l(const Lattice& m, const IVec& alpha, const IVec& beta, const Int& n) {
  return n * pairing(m, alpha, beta);
}

Rat mu_x(const TypeKRecord& r, const IVec& gamma1, const IVec& gamma2, const Int& n) {
  Lattice m = m_lattice(r);
  Rat value = make_rat(n * pairing(m, gamma1, gamma2), Int(2));
  if (den(value) != 1)
    throw VerificationError("mu_x " + r.group + ": half-pairing is not integral");
  return value;
}

PeriodVector tube_domain_period(const TypeKRecord& r, const QVec& b, const QVec& kappa) {
  Lattice m = m_lattice(r);
  const Eigen::Index rk = m.rank();
  if (b.size() != rk || kappa.size() != rk)
    throw Error("tube_domain_period: vectors must have length rank(M)");
  QMat g = to_rational(m.gram());
  Rat kappa_sq = (kappa.transpose() * g * kappa)(0, 0);
  if (kappa_sq <= 0)
    throw Error("tube_domain_period: <kappa, kappa> must be positive");

  // v = B + i kappa; <v, v> and <v, conj v> as Gaussian rationals.
  Rat bb = (b.transpose() * g * b)(0, 0);
  Rat bk = (b.transpose() * g * kappa)(0, 0);
  GaussRat vv(bb - kappa_sq, Rat(2) * bk);

  PeriodVector p;
  p.coords.reserve(static_cast<std::size_t>(rk) + 2);
  p.coords.emplace_back(Rat(1));                              // e
  p.coords.push_back(Rat(make_rat(Int(-1), Int(2))) * vv);    // f coefficient
  for (Eigen::Index i = 0; i < rk; ++i) p.coords.emplace_back(b(i), kappa(i));

  // Pairings in U + M: <e,e> = <f,f> = 0, <e,f> = 1.
  auto pair_with = [&](bool conjugate) {
    GaussRat first = p.coords[0];
    GaussRat second = p.coords[1];
    std::vector<GaussRat> rest(p.coords.begin() + 2, p.coords.end());
    GaussRat acc = first * (conjugate ? second.conj() : second) +
                   second * (conjugate ? first.conj() : first);
    for (Eigen::Index i = 0; i < rk; ++i)
      for (Eigen::Index j = 0; j < rk; ++j) {
        GaussRat rj = conjugate ? rest[static_cast<std::size_t>(j)].conj()
                                : rest[static_cast<std::size_t>(j)];
        acc = acc + g(i, j) * (rest[static_cast<std::size_t>(i)] * rj);
      }
    return acc;
  };
  p.self_pairing = pair_with(false);
  p.conj_pairing = pair_with(true);
  if (!p.self_pairing.is_zero())
    throw VerificationError("tube_domain_period: <omega, omega> != 0");
  if (p.conj_pairing != GaussRat(Rat(2) * kappa_sq))
    throw VerificationError("tube_domain_period: <omega, conj omega> != 2 <kappa, kappa>");
  return p;
}

GaussRat elliptic_mirror(const Rat& b, const Rat& kappa) {
  if (kappa <= 0) throw Error("elliptic_mirror: kappa must be positive");
  return GaussRat(b, kappa);
}

}  // namespace typek
