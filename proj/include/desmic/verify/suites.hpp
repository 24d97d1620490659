/*
   Copyright 2026 The desmic-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DESMIC_VERIFY_SUITES_HPP
#define DESMIC_VERIFY_SUITES_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "desmic/arith/f4.hpp"
#include "desmic/arith/gaussian.hpp"
#include "desmic/arith/prime_field.hpp"
#include "desmic/complex/line_complex.hpp"
#include "desmic/complex/projection.hpp"
#include "desmic/complex/scan.hpp"
#include "desmic/complex/symmetry.hpp"
#include "desmic/config/curve_system.hpp"
#include "desmic/config/models.hpp"
#include "desmic/config/sylvester.hpp"
#include "desmic/lattice/artin.hpp"
#include "desmic/lattice/lattice.hpp"
#include "desmic/surface/char2.hpp"
#include "desmic/surface/cremona.hpp"
#include "desmic/surface/desmic_surface.hpp"
#include "desmic/surface/rdp.hpp"
#include "desmic/verify/report.hpp"

#ifndef DESMIC_DATA_DIR
#define DESMIC_DATA_DIR "data"
#endif

namespace desmic {

struct SuiteOptions {
    std::vector<std::int64_t> primes{13, 17};
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string data_dir = DESMIC_DATA_DIR;
    double budget_seconds = 600;  // symmetry search
};

/// Raised before any check runs when a suite needs a data file that is not there.
class MissingDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"identities", "desmic-surface", "line-complex", "symmetry", "cremona",
                                                "char2",      "supersingular",  "lattices",     "projection"};
    return names;
}

namespace suites {

inline std::string data_path(const SuiteOptions& o, const std::string& file)
{
    auto p = (std::filesystem::path(o.data_dir) / file).string();
    if (!std::filesystem::exists(p)) throw MissingDataError("data file missing: " + p);
    return p;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",")
{
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? sep : "") << v[k];
    return os.str();
}

inline std::string profile_str(const std::map<std::string, int>& m)
{
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        s += (first ? "" : ", ") + k + "x" + std::to_string(v);
        first = false;
    }
    return s + "}";
}

// ---------------------------------------------------------------- identities

inline std::vector<CheckTask> identities_tasks(const SuiteOptions&)
{
    std::vector<CheckTask> t;
    t.push_back({"identities.desmic-tetrahedra", "-16xyzw + T' + T'' = 0 for the tetrahedra from [1,1,1,1]", [] {
                     using P = MultiPoly<Rational>;
                     auto vs = make_vars({"x", "y", "z", "w"});
                     P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
                     P t1 = (x - y - z + w) * (x - y + z - w) * (x + y - z - w) * (x + y + z + w);
                     P t2 = (-x + y + z + w) * (x - y + z + w) * (x + y - z + w) * (x + y + z - w);
                     bool id = verify_identity(Rational(-16) * x * y * z * w + t1 + t2, P(0));
                     auto tri = desmic_from_point(ProjPoint<Rational>{1, 1, 1, 1}, vs);
                     bool built = tri.pencil_dependent() && proportionality(tri.quartics[1], t1).has_value() &&
                                  proportionality(tri.quartics[2], t2).has_value();
                     return verdict(id && built, std::string("identity ") + (id ? "exact" : "FAILS") +
                                                     "; constructed faces " + (built ? "match" : "differ"));
                 }});
    t.push_back({"identities.eight-squares", "8(x^2+y^2+z^2+w^2) = sum of the squares of the eight face forms", [] {
                     using P = MultiPoly<Rational>;
                     auto vs = make_vars({"x", "y", "z", "w"});
                     P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
                     std::vector<P> forms{x - y - z - w, x - y + z + w, x + y - z + w, x + y + z - w,
                                          x - y - z + w, x - y + z - w, x + y - z - w, x + y + z + w};
                     P sum(0);
                     for (const auto& l : forms) sum += l * l;
                     bool ok = verify_identity(sum, Rational(8) * (x * x + y * y + z * z + w * w));
                     return verdict(ok, ok ? "exact" : "differs");
                 }});
    auto steinerian = [](auto tag) {
        using K = decltype(tag);
        auto vs = cremona_ring();
        auto q = cubic_normal_form_quadric<K>(vs);
        auto f = tritangent_cubic(q);
        auto g = steinerian_equation(q);
        auto w = MultiPoly<K>::var(vs, "w");
        const auto& fp = f.poly();
        return verify_identity(fp * fp - f.partial(0) * f.partial(1) * f.partial(2), g.poly() * w * w);
    };
    t.push_back({"identities.steinerian-integers", "f^2 - f_x f_y f_z = G w^2 over Z[a,b,c,d]", [=] {
                     bool ok = steinerian(Rational());
                     return verdict(ok, ok ? "exact over Q, integral coefficients" : "differs");
                 }});
    t.push_back({"identities.steinerian-f2", "f^2 - f_x f_y f_z = G w^2 over F2[a,b,c,d]", [=] {
                     bool ok = steinerian(F2());
                     return verdict(ok, ok ? "exact over F2" : "differs");
                 }});
    return t;
}

// ------------------------------------------------------------ desmic-surface

inline std::vector<CheckTask> desmic_surface_tasks(const SuiteOptions& o)
{
    using Q = Rational;
    using P = MultiPoly<Q>;
    std::vector<CheckTask> t;
    t.push_back({"desmic-surface.twelve-nodes", "the 12 points are nodes of every member, over Q(a,b) with c = -a-b", [] {
                     auto f = desmic_pencil<Q>();
                     std::vector<std::string> bad;
                     for (const auto& p : desmic_nodes<Q>())
                         if (!singular_at(f, p).singular || !node_check(f, p) || tangent_cone_discriminant(f, p).is_zero())
                             bad.push_back(p.str());
                     return verdict(bad.empty(), bad.empty() ? "12 of 12 ordinary nodes, tangent-cone discriminant nonzero in Q(a,b)"
                                                              : "not nodes: " + join(bad, " "));
                 }});
    t.push_back({"desmic-surface.sixteen-lines", "the 16 base-locus lines lie on every member", [] {
                     auto f = desmic_pencil<Q>();
                     auto lines = desmic_lines<Q>();
                     std::vector<std::string> bad;
                     for (const auto& l : lines)
                         if (!contains_line(f, l.line)) bad.push_back(l.name);
                     bool ok = bad.empty() && lines.size() == 16;
                     return verdict(ok, ok ? "16 of 16 contained" : "missing: " + join(bad, " "));
                 }});
    t.push_back({"desmic-surface.reye", "nodes and lines form a (12_4,16_3) configuration isomorphic to Reye's", [] {
                     auto d = desmic_config();
                     auto iso = config_isomorphic(d, reye_config());
                     return verdict(iso.has_value(), d.type().str() + (iso ? ", isomorphism found and re-checked" : ", no isomorphism"));
                 }});
    t.push_back({"desmic-surface.kummer-model", "the abstract Kummer curve model (nodes E_i, E^j, D_k; lines E_ij) is Reye's", [o] {
                     auto cs = load_curve_system(data_path(o, "kummer-char0.json"));
                     auto k = kummer_config(cs);
                     auto iso = config_isomorphic(k, reye_config());
                     return verdict(iso.has_value(), k.type().str() + (iso ? ", isomorphic" : ", not isomorphic"));
                 }});
    auto tangency = [] {
        auto f = desmic_pencil<Q>();
        return residual_conic_tangency(f, ProjPlane<Q>{1, 1, 0, 0}, ProjPlane<Q>{1, 0, 0, 1});
    };
    t.push_back({"desmic-surface.tangency-computed", "the plane u(x+y)+v(x+w) is tangent along the residual conic iff u(b-c)+v(a-c)=0", [=] {
                     auto r = tangency();
                     auto a = P::var(r.ring, "a"), b = P::var(r.ring, "b");
                     P c = -a - b;
                     bool ok = r.rank_one && verify_identity(r.alpha * (a - c), r.beta * (b - c));
                     return verdict(ok, "computed condition " + r.condition().str());
                 }});
    t.push_back({"desmic-surface.tangency-printed", "tangency condition u(b+c)+v(a+b)=0 as printed", [=] {
                     auto r = tangency();
                     auto a = P::var(r.ring, "a"), b = P::var(r.ring, "b");
                     P c = -a - b;
                     bool ok = verify_identity(r.alpha * (a + b), r.beta * (b + c));
                     return verdict(ok, ok ? "printed condition reproduced"
                                           : "printed condition u(b+c)+v(a+b) differs from computed " + r.condition().str());
                 }});
    return t;
}

// -------------------------------------------------------------- line-complex

inline std::vector<MultiPoly<Gaussian>> ci_forms(const CompleteIntersection<Gaussian>& ci) { return {ci.quadric.poly(), ci.cubic.poly()}; }

inline std::vector<CheckTask> line_complex_tasks(const SuiteOptions& o)
{
    using Q = Rational;
    using G = Gaussian;
    std::vector<CheckTask> t;
    t.push_back({"line-complex.montesano", "each net through 8 of the 12 nodes has Montesano complex equal to the printed cubic", [] {
                     auto pl = plucker_complex<Q>();
                     int ok = 0, n = 0;
                     for (const auto& net : desmic_nets<Q>()) {
                         ++n;
                         auto l = montesano_matches_cubic(net, pl);
                         ok += l && !l->is_zero();
                     }
                     return verdict(ok == n && n > 0, std::to_string(ok) + " of " + std::to_string(n) + " nets");
                 }});
    t.push_back({"line-complex.nodes", "the 18 + 16 printed points are ordinary nodes of the complex in Q(i)", [] {
                     auto inv = verify_node_inventory(klein_complex<G>());
                     auto pinv = verify_node_inventory(plucker_complex<Q>());
                     bool ok = inv.all_nodes() && pinv.all_nodes();
                     return verdict(ok, std::to_string(inv.sing1.size()) + " + " + std::to_string(inv.sing2.size()) +
                                            " nodes (Klein form), Pluecker form " + (pinv.all_nodes() ? "agrees" : "fails") +
                                            (ok ? "" : "; failures: " + join(inv.failures(), " ")));
                 }});
    t.push_back({"line-complex.planes", "the 24 planes lie in the complex; 3+4 nodes per plane, 4 per 18-node, 6 per 16-node", [] {
                     auto planes = klein_planes<G>();
                     auto inv = verify_plane_inventory(klein_complex<G>(), planes, klein_sing1<G>(), klein_sing2<G>());
                     auto pinv = verify_plane_inventory(plucker_complex<Q>(), plucker_planes<Q>(), plucker_sing1<Q>(), plucker_sing2<Q>());
                     bool ok = planes.size() == 24 && inv.all_contained() && inv.counts_match() && pinv.all_contained() && pinv.counts_match();
                     return verdict(ok, std::to_string(planes.size()) + " planes, incidence " + (inv.counts_match() ? "matches" : "differs"));
                 }});
    t.push_back({"line-complex.coset-config", "node labels of the 18 nodes are the 18 cosets; (24_3,18_4)", [] {
                     auto planes = klein_planes<G>();
                     auto inv = verify_plane_inventory(klein_complex<G>(), planes, klein_sing1<G>(), klein_sing2<G>());
                     bool cosets = labels_form_cosets(labels_through(planes, inv.through1), false);
                     auto c = coset_config();
                     bool ok = cosets && c.type().str() == "(24_3,18_4)";
                     return verdict(ok, c.type().str() + (cosets ? ", label sets are cosets" : ", label sets are not cosets"));
                 }});
    t.push_back({"line-complex.determinant-config", "planes and the 16 nodes form the (24_4,16_6) determinant configuration", [] {
                     auto planes = klein_planes<G>();
                     auto perm = klein_correspondence(plucker_sing2<G>(), klein_sing2<G>());
                     std::vector<ProjPoint<G>> by_number;
                     for (int j : perm) by_number.push_back(klein_sing2<G>()[j]);
                     auto inv = verify_plane_inventory(klein_complex<G>(), planes, klein_sing1<G>(), by_number);
                     bool cells = determinant_matrix_consistent(inv.in_plane2);
                     auto d = determinant_config();
                     bool ok = cells && d.type().str() == "(24_4,16_6)";
                     return verdict(ok, d.type().str() + (cells ? ", each plane is one permutation of the printed matrix"
                                                                : ", printed matrix cells inconsistent"));
                 }});
    for (auto p : o.primes) {
        const std::string ps = std::to_string(p);
        ScanOptions so{o.threads, 200'000'000};
        t.push_back({"line-complex.scan-F" + ps, "exhaustive scan of P^5(F_" + ps + ") finds exactly 34 singular points", [p, so] {
                         auto r = scan_singular_points(ci_forms(klein_complex<Gaussian>()), p, so);
                         std::set<std::vector<std::int64_t>> known;
                         for (const auto& q : klein_sing1<Gaussian>()) known.insert(reduce_point(q, p));
                         for (const auto& q : klein_sing2<Gaussian>()) known.insert(reduce_point(q, p));
                         bool same = std::set<std::vector<std::int64_t>>(r.points.begin(), r.points.end()) == known;
                         std::string d = std::to_string(r.count()) + " singular points among " + std::to_string(r.points_examined) +
                                         (same ? ", equal to the printed nodes mod p" : ", differ from the printed nodes mod p");
                         return Outcome{r.count() == 34 && same ? CheckStatus::EvidenceOnly : CheckStatus::Fail, d};
                     }});
        t.push_back({"line-complex.scan-variant-F" + ps, "with i replaced by 1 the scan over F_" + ps + " finds exactly 18", [p, so] {
                         auto r = scan_singular_points(ci_forms(klein_complex<Gaussian>(Gaussian(1))), p, so);
                         return Outcome{r.count() == 18 ? CheckStatus::EvidenceOnly : CheckStatus::Fail,
                                        std::to_string(r.count()) + " singular points"};
                     }});
    }
    return t;
}

// ------------------------------------------------------------------ symmetry

inline std::vector<CheckTask> symmetry_tasks(const SuiteOptions& o)
{
    using G = Gaussian;
    std::vector<CheckTask> t;
    t.push_back({"symmetry.group", "monomial symmetries of the complex: order 1152, node orbits {18,16}, one plane orbit of 24", [o] {
                     auto rep = monomial_symmetry_group(klein_complex<G>(), klein_sing1<G>(), klein_sing2<G>(), klein_planes<G>(),
                                                        o.threads, o.budget_seconds);
                     bool ok = rep.closed && rep.order() == 1152 && rep.node_orbit_sizes == std::vector<std::size_t>{18, 16} &&
                               rep.plane_orbit_sizes == std::vector<std::size_t>{24} && rep.planes_preserved &&
                               rep.orbits_refine_families;
                     return verdict(ok, "order " + std::to_string(rep.order()) + (rep.closed ? " (closed)" : " (not closed)") +
                                            ", node orbits {" + join(rep.node_orbit_sizes) + "}, plane orbits {" +
                                            join(rep.plane_orbit_sizes) + "}" + (rep.g0_found ? ", block swap present" : ""));
                 }});
    return t;
}

// ---------------------------------------------------------------- projection

inline std::vector<CheckTask> projection_tasks(const SuiteOptions&)
{
    using Q = Rational;
    using G = Gaussian;
    std::vector<CheckTask> t;
    t.push_back({"projection.quartic-threefold", "projection from a node gives the printed quartic threefold and its rewriting", [] {
                     auto x = projected_quartic(plucker_complex<Q>());
                     auto l = proportionality(x.poly(), quartic_threefold<Q>().poly());
                     bool rew = verify_identity(quartic_threefold<Q>().poly(), quartic_threefold_rewritten<Q>());
                     return verdict(l.has_value() && rew, std::string(l ? "proportional with factor " + l->str() : "not proportional") +
                                                              (rew ? ", rewriting exact" : ", rewriting differs"));
                 }});
    t.push_back({"projection.nodes-and-lines", "the 17 printed nodes and 4 singular lines of the quartic threefold", [] {
                     auto x = quartic_threefold<Q>();
                     auto nodes = quartic_threefold_nodes<Q>();
                     int good = 0;
                     for (const auto& p : nodes) good += node_check(x, p);
                     auto lines = quartic_threefold_singular_lines<Q>();
                     int lg = 0;
                     for (const auto& l : lines) lg += l.basis().size() == 2 && contains_span(x, l.basis()) && singular_along_span(x, l.basis());
                     bool ok = nodes.size() == 17 && good == 17 && lines.size() == 4 && lg == 4;
                     return verdict(ok, std::to_string(good) + " of " + std::to_string(nodes.size()) + " nodes, " + std::to_string(lg) +
                                            " of " + std::to_string(lines.size()) + " singular lines");
                 }});
    t.push_back({"projection.rationality-planes", "Pi_1, Pi_2, Pi_3 lie on the threefold and meet in the printed points", [] {
                     auto r = rationality_planes_check(quartic_threefold<Q>());
                     int c = 0, m = 0;
                     for (int k = 0; k < 3; ++k) {
                         c += r.contained[k];
                         m += r.intersections_match[k];
                     }
                     return verdict(r.ok(), std::to_string(c) + " of 3 contained, " + std::to_string(m) + " of 3 intersections match");
                 }});
    t.push_back({"projection.segre", "the printed t-forms give sum t = 0 and sum t^3 = lambda * cone cubic", [] {
                     auto r = segre_isomorphism_check<G>();
                     return verdict(r.ok(), std::string(r.linear_sum_zero ? "sum t = 0" : "sum t != 0") + ", rank " +
                                                std::to_string(r.rank) + (r.lambda ? ", lambda = " + r.lambda->str() : ", not proportional"));
                 }});
    return t;
}

// ------------------------------------------------------------------- cremona

inline std::vector<CheckTask> cremona_tasks(const SuiteOptions&)
{
    using Q = Rational;
    using P = MultiPoly<Q>;
    std::vector<CheckTask> t;
    t.push_back({"cremona.quartic", "the Steinerian of the normal-form web is the printed Cremona quartic", [] {
                     auto vs = cremona_ring();
                     auto g = steinerian_equation(cubic_normal_form_quadric<Q>(vs));
                     bool ok = verify_identity(g.poly(), cremona_quartic_explicit<Q>(vs).poly()) && g.degree() == 4;
                     return verdict(ok, ok ? "equal" : "differs");
                 }});
    t.push_back({"cremona.residual-conics", "the quadrics Q + alpha yz + ... cut the tritangent cubic in w times a conic", [] {
                     auto vs = make_vars({"a", "b", "c", "d", "x", "y", "z", "w", "al", "be", "ga"});
                     auto q = cubic_normal_form_quadric<Q>(vs);
                     auto f = tritangent_cubic(q);
                     P al = P::var(vs, "al"), be = P::var(vs, "be"), ga = P::var(vs, "ga");
                     P x = P::var(vs, "x"), y = P::var(vs, "y"), z = P::var(vs, "z"), w = P::var(vs, "w");
                     auto qd = cremona_quadric(q, al, be, ga).poly();
                     struct Case {
                         const char* var;
                         P image, conic;
                     };
                     std::vector<Case> cases{{"x", al * w, q.poly() + al * y * z}, {"y", be * w, q.poly() + be * x * z},
                                             {"z", ga * w, q.poly() + ga * x * y}};
                     int ok = 0;
                     for (const auto& c : cases) {
                         auto conic = c.conic.subst({{c.var, c.image}}, vs);
                         ok += verify_identity(qd.subst({{c.var, c.image}}, vs), conic) &&
                               verify_identity(f.poly().subst({{c.var, c.image}}, vs), w * conic);
                     }
                     return verdict(ok == 3, std::to_string(ok) + " of 3 planes");
                 }});
    t.push_back({"cremona.jacobian-system", "singular points of singular quadrics of the web lie on the Steinerian (F_13 samples)", [] {
                     using K = Fp<13>;
                     using PK = MultiPoly<K>;
                     auto vs = cremona_ring();
                     std::mt19937 rng(11);
                     std::uniform_int_distribution<int> d(0, 12);
                     int found = 0, on = 0;
                     for (int trial = 0; trial < 6; ++trial) {
                         std::map<std::string, K> par{{"a", K(d(rng))}, {"b", K(d(rng))}, {"c", K(d(rng))}, {"d", K(d(rng))}};
                         auto qs = Form<K>(cubic_normal_form_quadric<K>(vs).poly().specialize(par), xyzw_names());
                         auto g = steinerian_equation(qs);
                         K al(d(rng)), be(d(rng));
                         for (int gi = 0; gi < 13; ++gi) {
                             auto quad = cremona_quadric(qs, PK::constant(vs, al), PK::constant(vs, be), PK::constant(vs, K(gi)));
                             Matrix<K> m(4, 4);
                             for (int i = 0; i < 4; ++i)
                                 for (int j = 0; j < 4; ++j) {
                                     std::vector<K> e(8, K(0));
                                     e[4 + j] = K(1);
                                     m(i, j) = quad.partial(i).eval(e);
                                 }
                             for (const auto& ker : m.kernel()) {
                                 std::vector<K> pt(8, K(0));
                                 for (int k = 0; k < 4; ++k) pt[4 + k] = ker[k];
                                 ++found;
                                 on += g.poly().eval(pt).is_zero();
                             }
                         }
                     }
                     return verdict(found > 0 && on == found, std::to_string(on) + " of " + std::to_string(found) + " singular points on G");
                 }});
    t.push_back({"cremona.discriminant", "the web discriminant is det of the Hessian, of multidegree (4,4,4)", [] {
                     auto r = web_ring();
                     auto h = quadric_hessian(homogenized_web_quadric<Q>(r));
                     auto m = web_discriminant_matrix<Q>(r);
                     bool same = true;
                     for (int i = 0; i < 4; ++i)
                         for (int j = 0; j < 4; ++j) same = same && verify_identity(h[i][j], m[i][j]);
                     std::vector<std::pair<std::string, std::string>> pairs{{"al0", "al1"}, {"be0", "be1"}, {"ga0", "ga1"}};
                     auto deg = multidegree(det_poly_matrix(m), pairs);
                     bool ok = same && deg == std::vector<int>{4, 4, 4};
                     return verdict(ok, std::string(same ? "matrix is the Hessian" : "matrix differs") + ", multidegree (" + join(deg) + ")");
                 }});
    return t;
}

// --------------------------------------------------------------------- char2

inline std::vector<CheckTask> char2_tasks(const SuiteOptions& o)
{
    std::vector<CheckTask> t;
    t.push_back({"char2.cremona-quartic", "reduction mod 2 of the Steinerian is the printed characteristic-2 quartic", [] {
                     auto vs = cremona_ring();
                     auto g2 = steinerian_equation(cubic_normal_form_quadric<F2>(vs));
                     bool ok = verify_identity(g2.poly(), cremona_quartic_char2_explicit<F2>(vs).poly());
                     auto parts = cremona_char2_partials_explicit<F2>(vs);
                     int pk = 0;
                     for (int k = 0; k < 4; ++k) pk += verify_identity(g2.partial(k), parts[k]);
                     return verdict(ok && pk == 4, std::string(ok ? "equal" : "differs") + ", " + std::to_string(pk) + " of 4 partials match");
                 }});
    t.push_back({"char2.pfaffian", "in characteristic 2 the discriminant is the square of a Pfaffian of multidegree (2,2,2)", [] {
                     auto r = web_ring();
                     auto h2 = quadric_hessian(homogenized_web_quadric<F2>(r));
                     auto m2 = web_pfaffian_matrix<F2>(r);
                     bool same = true;
                     for (int i = 0; i < 4; ++i)
                         for (int j = 0; j < 4; ++j) same = same && verify_identity(h2[i][j], m2[i][j]);
                     auto pf = pfaffian_poly_matrix(m2);
                     std::vector<std::pair<std::string, std::string>> pairs{{"al0", "al1"}, {"be0", "be1"}, {"ga0", "ga1"}};
                     auto deg = multidegree(pf, pairs);
                     bool sq = verify_identity(pf * pf, det_poly_matrix(m2));
                     return verdict(same && sq && deg == std::vector<int>{2, 2, 2},
                                    "multidegree (" + join(deg) + ")" + (sq ? ", Pf^2 = det" : ", Pf^2 != det"));
                 }});
    t.push_back({"char2.singular-points", "the three 4-point families and P0 are singular, in quotient rings over F2(a,b,c,d)", [] {
                     auto f = cremona_quartic_char2_explicit<F2>(cremona_ring());
                     auto pts = char2_cremona_points<F2>();
                     std::vector<std::string> bad;
                     int total = 0;
                     for (const auto& p : pts) {
                         if (!char2_singular_at(f, p).singular) bad.push_back(p.name);
                         total += p.name == "P0" ? 1 : p.relation.rel.degree(p.ring->index(p.relation.var));
                     }
                     bool ok = bad.empty() && total == 13;
                     return verdict(ok, std::to_string(total) + " points in " + std::to_string(pts.size()) + " families" +
                                            (bad.empty() ? "" : "; not singular: " + join(bad, " ")));
                 }});
    t.push_back({"char2.p0-a3", "at (a,b,c,d) = (0,0,1,1) the point P0 is an A3 singularity", [] {
                     auto f4 = cremona_char2_at<F4>(F4(0), F4(0), F4(1), F4(1));
                     ProjPoint<F4> p0{0, 0, 0, 1};
                     bool sing = singular_at(f4, p0).singular;
                     auto v = an_type_at(f4, p0);
                     return verdict(sing && v.is_a(3), "detector: " + v.str() + " (over F4)");
                 }});
    auto kummer = [](auto alpha) {
        using K = decltype(alpha);
        auto k = kummer_char2_quartic(alpha);
        int lines = 0, a3 = 0;
        for (const auto& l : k.lines) lines += contains_line(k.form, l.line);
        for (const auto& p : k.points) a3 += singular_at(k.form, p).singular && an_type_at(k.form, p).is_a(3);
        std::vector<std::string> pl, bl;
        for (const auto& p : k.points) pl.push_back(p.str());
        for (const auto& l : k.lines) bl.push_back(l.name);
        AbstractConfig c(pl, bl, k.incidence);
        bool ok = lines == 4 && k.lines.size() == 4 && k.points.size() == 6 && a3 == 6 && c.type().str() == "(6_2,4_3)";
        (void)sizeof(K);
        return verdict(ok, std::to_string(lines) + " lines, " + std::to_string(a3) + " of " + std::to_string(k.points.size()) +
                               " points A3, configuration " + c.type().str());
    };
    t.push_back({"char2.kummer-alpha-1", "F_alpha at alpha = 1: 4 lines, 6 A3 points, (6_2,4_3)", [=] { return kummer(F2(1)); }});
    t.push_back({"char2.kummer-alpha-omega", "F_alpha at alpha = w in F4: 4 lines, 6 A3 points, (6_2,4_3)", [=] { return kummer(F4::omega()); }});
    t.push_back({"char2.ordinary-divisor", "on the ordinary Kummer model, H = sum pi_i - sum E_i^j - 2 sum E_i^0 has H^2 = 4", [o] {
                     auto cs = load_curve_system(data_path(o, "kummer-char2-ordinary.json"));
                     auto h = divisor_pairings(cs, "H");
                     return verdict(h.square == Rational(4), "H^2 = " + h.square.str() + " on " + std::to_string(cs.size()) + " curves");
                 }});
    return t;
}

// ------------------------------------------------------------- supersingular

/// Number of curves of the 42 with each value of H.C.
inline std::map<std::string, int> supersingular_profile(const CurveSystem& cs)
{
    auto h = divisor_pairings(cs, "H");
    std::map<std::string, int> m;
    for (const auto& [id, p] : h.with_curves) ++m[p.str()];
    return m;
}

inline std::vector<CheckTask> supersingular_tasks(const SuiteOptions& o)
{
    std::vector<CheckTask> t;
    t.push_back({"supersingular.pg24", "PG(2,4) is a (21_5) configuration", [] {
                     auto c = pg24();
                     return verdict(c.type().str() == "(21_5,21_5)", c.type().str());
                 }});
    t.push_back({"supersingular.totals-table", "the duad/syntheme/total table is reproduced byte for byte", [] {
                     auto sys = duad_syntheme_system();
                     bool ok = render_totals_table(sys) == render_printed_totals_table() && count_totals(sys) == 6;
                     return verdict(ok, ok ? "identical, 6 totals" : "differs from the printed table");
                 }});
    t.push_back({"supersingular.fibrations", "the three elliptic fibrations have only D~4 fibers and share 16 simple components", [] {
                     auto r = fibration_tables(label_42_curves());
                     std::size_t fibers = 0;
                     for (const auto& f : r.fibrations) fibers += f.fibers.size();
                     return verdict(r.ok(), std::to_string(fibers) + " fibers in " + std::to_string(r.fibrations.size()) +
                                                " fibrations, " + std::to_string(r.common.size()) + " common components" +
                                                (r.failures.empty() ? "" : "; " + join(r.failures, "; ")));
                 }});
    t.push_back({"supersingular.reye", "the 12 central and 16 common components form Reye's configuration", [] {
                     auto d = extract_desmic_28(supersingular_curve_system());
                     return verdict(d.reye.has_value(), d.config.type().str() + (d.reye ? ", isomorphic" : ", not isomorphic"));
                 }});
    t.push_back({"supersingular.data-file", "data/supersingular-42.json equals the generated 42-curve system", [o] {
                     std::ifstream in(data_path(o, "supersingular-42.json"));
                     auto j = nlohmann::json::parse(in);
                     bool ok = j == to_json(supersingular_curve_system());
                     return verdict(ok, ok ? "equal" : "stale; regenerate with --export-supersingular");
                 }});
    t.push_back({"supersingular.h-square", "H^2 = 4 and the listed curves have the stated images", [] {
                     auto cs = supersingular_curve_system();
                     auto h = divisor_pairings(cs, "H");
                     std::map<std::string, Rational> p(h.with_curves.begin(), h.with_curves.end());
                     auto d = extract_desmic_28(cs);
                     bool ok = h.square == Rational(4);
                     for (const auto& c : d.centrals) ok = ok && p.at(c) == Rational(0);
                     for (const auto& c : d.simple) ok = ok && p.at(c) == Rational(1);
                     for (const char* c : {"1", "6", "16.23.45"}) ok = ok && p.at(c) == Rational(2);
                     std::vector<std::string> chain{"16", "16.24.35", "16.25.34"};
                     for (const auto& c : chain) ok = ok && p.at(c) == Rational(0);
                     ok = ok && classify_dynkin(cs, chain) == "A3";
                     return verdict(ok, "H^2 = " + h.square.str() + "; 12 nodes, 16 lines, conics {1, 6, 16.23.45}, A3 chain {16, 16.24.35, 16.25.34}");
                 }});
    t.push_back({"supersingular.h-profile", "H.C over the 42 curves has profile {0x15, 1x16, 2x3, 3x8}", [] {
                     auto m = supersingular_profile(supersingular_curve_system());
                     std::map<std::string, int> printed{{"0", 15}, {"1", 16}, {"2", 3}, {"3", 8}};
                     std::string cubics;
                     auto cs = supersingular_curve_system();
                     auto h = divisor_pairings(cs, "H");
                     std::map<std::string, Rational> p(h.with_curves.begin(), h.with_curves.end());
                     for (const char* c : {"24", "25", "34", "35", "T1", "T3", "T4", "T6"}) cubics += std::string(cubics.empty() ? "" : ", ") + c + ":" + p.at(c).str();
                     return verdict(m == printed, "computed " + profile_str(m) + "; curves listed as cubics have H.C = {" + cubics + "}");
                 }});
    return t;
}

// ------------------------------------------------------------------ lattices

inline std::vector<CheckTask> lattices_tasks(const SuiteOptions& o)
{
    auto L = [](const std::string& n) { return standard_lattice(n); };
    std::vector<CheckTask> t;
    t.push_back({"lattices.genus-match", "U+D8+D9 and U+E8+D8+<-4>: signature (1,18), disc order 16, isometric disc forms", [=] {
                     auto v = genus_match_indefinite(direct_sum({L("U"), L("D8"), L("D9")}), curve_lattice_l());
                     bool ok = v.match && v.signature1 == std::make_pair(1, 18) && v.disc_order1 == 16;
                     return verdict(ok, "signature (" + std::to_string(v.signature1.first) + "," + std::to_string(v.signature1.second) +
                                            "), disc order " + v.disc_order1.get_str() + ", " + v.note);
                 }});
    t.push_back({"lattices.curve-span", "the 28 curves span a lattice of rank 19 with disc order 16", [o] {
                     auto cs = load_curve_system(data_path(o, "kummer-char0.json"));
                     auto s = lattice_from_curves(cs);
                     auto d = extract_desmic_28(supersingular_curve_system());
                     auto s2 = lattice_from_curves(d.curves);
                     bool iso = fq_isometric(disc_form(s.lattice), disc_form(curve_lattice_l()));
                     bool ok = s.rank == 19 && s.disc_order == 16 && s.signature == std::make_pair(1, 18) && iso && s2.rank == 19 &&
                               s2.disc_order == 16;
                     return verdict(ok, "rank " + std::to_string(s.rank) + ", disc order " + s.disc_order.get_str() + ", invariant factors (" +
                                            join(s.invariant_factors) + ")" + (iso ? ", disc form of U+E8+D8+<-4>" : "") +
                                            "; supersingular model rank " + std::to_string(s2.rank) + ", disc " + s2.disc_order.get_str());
                 }});
    t.push_back({"lattices.d8-fibration-span", "the D~8 fibration subsystem spans a lattice in the genus of U+D8+D5+D4", [o, L] {
                     auto cs = load_curve_system(data_path(o, "kummer-char0.json"));
                     std::vector<std::string> ids;
                     for (const auto& c : cs.fibration("g").fibers.at(0).components) ids.push_back(cs.id(c.curve));
                     for (const char* c : {"E^2", "E20", "E2", "E22", "E23", "D3", "E30", "E3", "E32", "E33"}) ids.push_back(c);
                     auto s = lattice_from_curves(cs, ids);
                     bool g = genus_match_indefinite(s.lattice, direct_sum({L("U"), L("D8"), L("D5"), L("D4")})).match;
                     ids.push_back("E^3");
                     auto s3 = lattice_from_curves(cs, ids);
                     bool ok = s.rank == 19 && g && s3.disc_order == 16;
                     return verdict(ok, "rank " + std::to_string(s.rank) + ", disc order " + s.disc_order.get_str() +
                                            (g ? " (genus of U+D8+D5+D4)" : "") + "; with E^3 disc order " + s3.disc_order.get_str());
                 }});
    t.push_back({"lattices.divisors", "H^2 = 4, H.E_ij = 1 on the Kummer model; the node-pair system also has H^2 = 4", [o] {
                     auto cs = load_curve_system(data_path(o, "kummer-char0.json"));
                     auto h = divisor_pairings(cs, "H");
                     int ones = 0, zeros = 0;
                     for (const auto& [id, p] : h.with_curves) {
                         ones += p == Rational(1);
                         zeros += p.is_zero();
                     }
                     auto h2 = divisor_pairings(cs, "H_node_pair");
                     bool ok = h.square == Rational(4) && ones == 16 && zeros == 12 && h2.square == Rational(4);
                     return verdict(ok, "H^2 = " + h.square.str() + ", H.C = 1 on " + std::to_string(ones) + ", 0 on " +
                                            std::to_string(zeros) + "; node-pair H^2 = " + h2.square.str());
                 }});
    t.push_back({"lattices.finite-forms", "u+u = v+v and q_1(4)+v = q_5(4)+u; D4 -> v, D8 -> u", [=] {
                     auto u = FiniteQuadForm::u_plus(1), v = FiniteQuadForm::v_plus(1);
                     bool a = fq_isometric(direct_sum(u, u), direct_sum(v, v));
                     bool b = fq_isometric(direct_sum(FiniteQuadForm::q_theta(1, 2), v), direct_sum(FiniteQuadForm::q_theta(5, 2), u));
                     bool c = fq_isometric(disc_form(L("D4")), v) && fq_isometric(disc_form(L("D8")), u) && !fq_isometric(u, v);
                     return verdict(a && b && c, std::string("u+u~v+v ") + (a ? "yes" : "no") + ", q1+v~q5+u " + (b ? "yes" : "no") +
                                                     ", root lattice forms " + (c ? "as stated" : "differ"));
                 }});
    t.push_back({"lattices.overlattice-chain", "D5+A3 within D8 within E8 by glue", [] {
                     auto c = d5_a3_chain();
                     bool ok = c.chain && c.d8.index == 2 && c.e8.index == 4 && c.d8_iso && c.e8_iso;
                     return verdict(ok, "index 2 gives " + std::string(c.d8_iso ? "D8" : "not D8") + ", index 4 gives " +
                                            (c.e8_iso ? "E8" : "not E8") + (c.chain ? ", chain verified" : ", chain broken"));
                 }});
    for (int sigma = 1; sigma <= 3; ++sigma)
        t.push_back({"lattices.artin2-sigma" + std::to_string(sigma),
                     "U+E8+D8+<-4> embeds primitively into S_sigma iff sigma <= 2 (sigma = " + std::to_string(sigma) + ")", [sigma] {
                         auto r = artin2_check(sigma);
                         bool expected = sigma <= 2;
                         std::string d = std::string(r.embeddable ? "embeddable" : "not embeddable") + "; " + r.witness + "; l(L) = " +
                                         std::to_string(r.l_of_l) + ", l(S) = " + std::to_string(r.l_of_s) + ", " +
                                         std::to_string(std::max(0, r.l_of_m_lower)) + " <= l(M) <= 3";
                         bool ok = r.embeddable == expected && r.picard_signature == std::make_pair(1, 21) && r.length_bound_allows;
                         if (sigma == 3) {
                             d += "; " + std::to_string(r.enumeration.candidates) + " reduced ternaries of det 16 in " +
                                  std::to_string(r.enumeration.classes.size()) + " classes, " + std::to_string(r.matches) +
                                  " with disc form q_1(4)+v";
                             ok = ok && !r.enumeration.classes.empty() && r.matches == 0;
                         }
                         return verdict(ok, d);
                     }});
    t.push_back({"lattices.ternary-sanity", "the ternary enumeration at det 4 finds exactly A3", [] {
                     auto e = enumerate_even_ternaries(4);
                     bool ok = e.classes.size() == 1 &&
                               definite_isometric(Lattice("T", e.classes[0]), Lattice("A3", negated(standard_lattice("A3").gram())));
                     return verdict(ok, std::to_string(e.classes.size()) + " class(es)");
                 }});
    t.push_back({"lattices.transcendental", "U(2)+<4> has discriminant form opposite to U+E8+D8+<-4>", [=] {
                     Lattice tr("T", direct_sum(rescale(L("U"), 2), L("<4>")).gram());
                     bool ok = fq_isometric(disc_form(tr), disc_form(curve_lattice_l()).negated()) && tr.signature() == std::make_pair(2, 1);
                     return verdict(ok, ok ? "signature (2,1), opposite forms" : "forms do not match");
                 }});
    t.push_back({"lattices.cm-lattices", "U+E8+E8+<-4>+<-4> and U+E8+E8+A2(2): rank 20, signature (1,19)", [=] {
                     auto a = direct_sum({L("U"), L("E8"), L("E8"), L("<-4>"), L("<-4>")});
                     auto b = direct_sum({L("U"), L("E8"), L("E8"), rescale(L("A2"), 2)});
                     bool ok = a.rank() == 20 && b.rank() == 20 && a.signature() == std::make_pair(1, 19) && b.signature() == std::make_pair(1, 19);
                     return verdict(ok, "|det| " + mpz_class(abs(a.det())).get_str() + " and " + mpz_class(abs(b.det())).get_str());
                 }});
    return t;
}

}  // namespace suites

inline std::vector<CheckTask> suite_tasks(const std::string& name, const SuiteOptions& o)
{
    if (name == "identities") return suites::identities_tasks(o);
    if (name == "desmic-surface") return suites::desmic_surface_tasks(o);
    if (name == "line-complex") return suites::line_complex_tasks(o);
    if (name == "symmetry") return suites::symmetry_tasks(o);
    if (name == "projection") return suites::projection_tasks(o);
    if (name == "cremona") return suites::cremona_tasks(o);
    if (name == "char2") return suites::char2_tasks(o);
    if (name == "supersingular") return suites::supersingular_tasks(o);
    if (name == "lattices") return suites::lattices_tasks(o);
    throw std::invalid_argument("unknown suite: " + name);
}

/// Data files a suite reads; checked before anything runs.
inline std::vector<std::string> suite_data_files(const std::string& name)
{
    if (name == "desmic-surface" || name == "lattices") return {"kummer-char0.json"};
    if (name == "char2") return {"kummer-char2-ordinary.json"};
    if (name == "supersingular") return {"supersingular-42.json"};
    return {};
}

inline VerificationReport run_suite(const std::string& name, const SuiteOptions& o = {})
{
    std::vector<std::string> names;
    if (name == "all") names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end()) names = {name};
    else throw std::invalid_argument("unknown suite: " + name);
    for (const auto& n : names)
        for (const auto& f : suite_data_files(n)) suites::data_path(o, f);
    std::vector<CheckTask> tasks;
    for (const auto& n : names) {
        auto t = suite_tasks(n, o);
        tasks.insert(tasks.end(), t.begin(), t.end());
    }
    VerificationReport r;
    r.suite = name;
    r.checks = run_checks(tasks, o.threads);
    return r;
}

}  // namespace desmic

#endif
