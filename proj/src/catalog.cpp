#include "delone/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "delone/gram_auto.hpp"

namespace delone {

namespace {

RVec frac_vec(RVec v) {
    for (auto& c : v) c -= Rat(floor_int(c));
    return v;
}

RMat identity_gram(int d) { return rmat_identity(d); }

std::vector<IMat> group_closure(std::vector<IMat> gens, int d) {
    std::vector<IMat> elems;
    IMat id(d, IVec(d, Int(0)));
    for (int i = 0; i < d; ++i) id[i][i] = 1;
    elems.push_back(id);
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (const IMat& g : gens) {
                IMat p = imat_mul(g, elems[i]);
                if (std::find(elems.begin(), elems.end(), p) == elems.end()) {
                    elems.push_back(p);
                    grew = true;
                }
            }
    }
    return elems;
}

IMat imat_from(std::initializer_list<std::initializer_list<long>> rows) {
    IMat m;
    for (auto& r : rows) {
        IVec row;
        for (long v : r) row.push_back(Int(v));
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

PeriodicSet integer_lattice(int d) {
    if (d < 1) throw std::invalid_argument("integer_lattice: dimension must be positive");
    return PeriodicSet(GramMatrix(identity_gram(d)), {RVec(d, Rat(0))});
}

PeriodicSet d_plus(int d) {
    if (d < 2) throw std::invalid_argument("d_plus: dimension must be at least 2");
    RVec half(d, Rat(1, 2));
    return PeriodicSet(GramMatrix(identity_gram(d)), {RVec(d, Rat(0)), half});
}

PeriodicSet hexagonal_lattice() {
    RMat g{{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(1)}};
    return PeriodicSet(GramMatrix(g), {RVec(2, Rat(0))});
}

PeriodicSet two_orbit_shift(int d, const RVec& shift) {
    if (static_cast<int>(shift.size()) != d)
        throw std::invalid_argument("two_orbit_shift: shift dimension mismatch");
    RVec s = frac_vec(shift);
    RVec h = shift;
    for (auto& c : h) c /= 2;
    h = frac_vec(h);
    if (rvec_is_zero(s) || rvec_is_zero(h))
        throw std::invalid_argument("two_orbit_shift: shift must be nonzero modulo one (and not twice a lattice vector)");
    std::vector<RVec> motif{RVec(d, Rat(0)), h, s};
    std::sort(motif.begin(), motif.end());
    return PeriodicSet(GramMatrix(identity_gram(d)), std::move(motif));
}

PeriodicSet layered(int d, const Rat& ratio) {
    if (d < 2) throw std::invalid_argument("layered: dimension must be at least 2");
    if (sgn(ratio) <= 0) throw std::invalid_argument("layered: ratio must be positive");
    RMat g = identity_gram(d);
    g[d - 1][d - 1] = ratio * ratio;
    return PeriodicSet(GramMatrix(g), {RVec(d, Rat(0))});
}

PeriodicSet wallpaper_orbit(const std::string& group, const RVec& seed) {
    if (seed.size() != 2) throw std::invalid_argument("wallpaper_orbit: seed must be planar");
    RMat gram;
    std::vector<IMat> gens;
    if (group == "p1") {
        gram = RMat{{Rat(1), Rat(1, 4)}, {Rat(1, 4), Rat(2)}};
    } else if (group == "p2") {
        gram = RMat{{Rat(1), Rat(1, 4)}, {Rat(1, 4), Rat(2)}};
        gens.push_back(imat_from({{-1, 0}, {0, -1}}));
    } else if (group == "p4") {
        gram = identity_gram(2);
        gens.push_back(imat_from({{0, -1}, {1, 0}}));
    } else if (group == "p4m") {
        gram = identity_gram(2);
        gens.push_back(imat_from({{0, -1}, {1, 0}}));
        gens.push_back(imat_from({{1, 0}, {0, -1}}));
    } else if (group == "p6") {
        gram = RMat{{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(1)}};
        gens.push_back(imat_from({{0, -1}, {1, 1}}));
    } else {
        throw std::invalid_argument("wallpaper_orbit: unknown group " + group);
    }

    std::vector<RVec> motif;
    for (const IMat& u : group_closure(std::move(gens), 2)) {
        RVec p(2, Rat(0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) p[i] += Rat(u[i][j]) * seed[j];
        p = frac_vec(p);
        if (std::find(motif.begin(), motif.end(), p) == motif.end()) motif.push_back(p);
    }
    std::sort(motif.begin(), motif.end());
    return PeriodicSet(GramMatrix(gram), std::move(motif));
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&out](std::string name, std::string summary, PeriodicSet set,
                      std::map<std::string, std::string> expected) {
        out.push_back(CatalogEntry{std::move(name), std::move(summary), std::move(set),
                                   std::move(expected)});
    };

    for (int d = 1; d <= 5; ++d) {
        PeriodicSet z = integer_lattice(d);
        std::map<std::string, std::string> facts{
            {"packing_radius_sq", "1/4"},
            {"oracle", "REGULAR"},
            {"bonded_at_2r", "true"},
        };
        if (d <= 4)
            facts["covering_radius_sq"] = rat_str(rat(d, 4));
        else
            z.declared_R_sq = Rat(5, 4);
        static const char* orders[6] = {"", "2", "8", "48", "384", "3840"};
        facts["order_2R"] = orders[d];
        if (d == 5) facts["declared_R_sq"] = "5/4";
        add("z" + std::to_string(d), "integer lattice Z^" + std::to_string(d), std::move(z),
            std::move(facts));
    }

    add("hexagonal", "hexagonal lattice, shortest vectors at sixty degrees", hexagonal_lattice(),
        {{"packing_radius_sq", "1/4"},
         {"covering_radius_sq", "1/3"},
         {"order_2R", "12"},
         {"oracle", "REGULAR"},
         {"bonded_at_2r", "true"}});

    add("d3_plus", "body-centered cubic: Z^3 plus the half-diagonal coset", d_plus(3),
        {{"packing_radius_sq", "3/16"},
         {"covering_radius_sq", "5/16"},
         {"order_2R", "48"},
         {"oracle", "REGULAR"},
         {"bonded_at_2r", "true"}});
    add("d4_plus", "Z^4 plus the half-diagonal coset (a scaled D4)", d_plus(4),
        {{"packing_radius_sq", "1/4"},
         {"covering_radius_sq", "1/2"},
         {"order_2R", "1152"},
         {"oracle", "REGULAR"},
         {"bonded_at_2r", "true"}});
    {
        PeriodicSet p5 = d_plus(5);
        p5.declared_R_sq = Rat(9, 16);
        add("d5_plus", "Z^5 plus the half-diagonal coset: full-rank reach but not bonded at 2r",
            std::move(p5),
            {{"packing_radius_sq", "1/4"},
             {"declared_R_sq", "9/16"},
             {"order_2R", "3840"},
             {"oracle", "REGULAR"},
             {"bonded_at_2r", "false"}});
    }

    add("two_orbit", "shifted-row plane with two cluster classes at every radius past the first",
        two_orbit_shift(2, RVec{Rat(1, 3), Rat(0)}),
        {{"packing_radius_sq", "1/144"},
         {"covering_radius_sq", "13/36"},
         {"oracle", "NOT_REGULAR"},
         {"bonded_at_2r", "false"}});

    add("layered_3_3", "cubic layers three apart: in-plane steps reach only a plane",
        layered(3, Rat(3)),
        {{"packing_radius_sq", "1/4"},
         {"covering_radius_sq", "11/4"},
         {"order_2R", "16"},
         {"oracle", "REGULAR"},
         {"bonded_at_2r", "false"}});

    add("p1_orbit", "oblique lattice orbit with trivial point group",
        wallpaper_orbit("p1", RVec{Rat(1, 5), Rat(2, 5)}),
        {{"oracle", "REGULAR"}, {"order_2R", "2"}});
    add("p2_orbit", "half-turn orbit, two points per cell",
        wallpaper_orbit("p2", RVec{Rat(1, 5), Rat(3, 10)}),
        {{"oracle", "REGULAR"}});
    add("p4_orbit", "quarter-turn orbit, four points per cell",
        wallpaper_orbit("p4", RVec{Rat(1, 5), Rat(1, 10)}),
        {{"oracle", "REGULAR"}});
    add("p4m_orbit", "square-symmetry orbit, eight points per cell",
        wallpaper_orbit("p4m", RVec{Rat(1, 5), Rat(1, 10)}),
        {{"oracle", "REGULAR"}});
    add("p6_orbit", "sixfold orbit on the hexagonal lattice",
        wallpaper_orbit("p6", RVec{Rat(1, 5), Rat(1, 10)}),
        {{"oracle", "REGULAR"}});
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) return &e;
    return nullptr;
}

PeriodicSet catalog_make(const std::string& name) {
    const CatalogEntry* e = catalog_find(name);
    if (!e) {
        std::string msg = "unknown catalog set '" + name + "'; available:";
        for (const auto& n : catalog_names()) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    return e->set;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const CatalogEntry& e : catalog_entries()) names.push_back(e.name);
    return names;
}

}  // namespace delone
