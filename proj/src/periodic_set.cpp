#include "delone/periodic_set.hpp"

#include <sstream>

namespace delone {

GramMatrix::GramMatrix(RMat entries) : g(std::move(entries)) {
  d = static_cast<int>(g.size());
  if (d < 1) throw std::invalid_argument("gram matrix must have dimension >= 1");
  for (RVec& row : g) {
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("gram matrix not square");
    for (Rat& v : row) v.canonicalize();  // callers may hand over raw p/q pairs
  }
  ldl = ldl_decompose(g);  // validates symmetry and positive definiteness
  inv = inverse(g);
  scale = 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) scale = lcm(scale, Int(g[i][j].get_den()));
  scaled.assign(d, IVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rat v = g[i][j] * Rat(scale);
      scaled[i][j] = v.get_num();  // exact by construction
    }
}

Rat form_value(const GramMatrix& gm, const RVec& x) { return form_inner(gm, x, x); }

Rat form_inner(const GramMatrix& gm, const RVec& x, const RVec& y) {
  Rat acc(0);
  for (int i = 0; i < gm.d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < gm.d; ++j) acc += x[i] * gm.g[i][j] * y[j];
  }
  return acc;
}

bool operator==(const Site& a, const Site& b) {
  return a.motif_index == b.motif_index && a.translation == b.translation;
}
bool operator!=(const Site& a, const Site& b) { return !(a == b); }

bool site_less(const Site& a, const Site& b) {
  if (a.motif_index != b.motif_index) return a.motif_index < b.motif_index;
  return a.translation < b.translation;
}

std::string site_str(const Site& s) {
  std::ostringstream os;
  os << s.motif_index << ":(";
  for (std::size_t i = 0; i < s.translation.size(); ++i) {
    if (i) os << ",";
    os << s.translation[i];
  }
  os << ")";
  return os.str();
}

PeriodicSet::PeriodicSet(GramMatrix gm, std::vector<RVec> motif_points,
                         std::optional<Rat> declared_R)
    : gram(std::move(gm)), motif(std::move(motif_points)), declared_R_sq(std::move(declared_R)) {
  if (motif.empty()) throw std::invalid_argument("motif must be nonempty");
  for (RVec& m : motif) {
    if (static_cast<int>(m.size()) != gram.d)
      throw std::invalid_argument("motif point dimension mismatch");
    for (Rat& c : m) {
      c.canonicalize();
      if (c < 0 || c >= 1) throw std::invalid_argument("motif coordinates must lie in [0,1)");
    }
  }
  if (declared_R_sq) declared_R_sq->canonicalize();
  for (std::size_t i = 0; i < motif.size(); ++i)
    for (std::size_t j = i + 1; j < motif.size(); ++j)
      if (motif[i] == motif[j]) throw std::invalid_argument("motif points must be distinct");
  if (declared_R_sq && sgn(*declared_R_sq) <= 0)
    throw std::invalid_argument("declared covering radius must be positive");
}

RVec PeriodicSet::position(const Site& s) const {
  if (s.motif_index < 0 || s.motif_index >= motif_size())
    throw std::out_of_range("site motif index out of range");
  if (static_cast<int>(s.translation.size()) != dim())
    throw std::invalid_argument("site translation dimension mismatch");
  RVec p = motif[s.motif_index];
  for (int i = 0; i < dim(); ++i) p[i] += Rat(static_cast<long>(s.translation[i]));
  return p;
}

Site PeriodicSet::origin(int motif_index) const {
  if (motif_index < 0 || motif_index >= motif_size())
    throw std::out_of_range("motif index out of range");
  Site s;
  s.motif_index = motif_index;
  s.translation.assign(dim(), 0);
  return s;
}

}  // namespace delone
