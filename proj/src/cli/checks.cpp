#include "nodal/cli/checks.hpp"

#include "nodal/congruence/congruence.hpp"
#include "nodal/configs/incidence.hpp"
#include "nodal/exact/modpoly.hpp"
#include "nodal/involutions/involutions.hpp"
#include "nodal/lattice/lattice.hpp"
#include "nodal/pentads/pentads.hpp"
#include "nodal/surface/code.hpp"
#include "nodal/surface/kummer.hpp"
#include "nodal/surface/picard.hpp"
#include "nodal/varieties/duality.hpp"
#include "nodal/varieties/fp_scan.hpp"
#include "nodal/varieties/loci.hpp"
#include "nodal/varieties/section.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nodal::cli {

using namespace varieties;
using nlohmann::json;

namespace {

Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

std::string str(const Integer &x) { return x.get_str(); }

json fp_points(const std::vector<FpPoint> &pts) {
  json a = json::array();
  for (const auto &p : pts) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + std::to_string(p[i]);
    a.push_back(s + ")");
  }
  return a;
}

const surface::PicardModel &pic() {
  static const surface::PicardModel m = surface::picard_lattice();
  return m;
}

const pentads::Classification &classification() {
  static const pentads::Classification c = pentads::classify_all();
  return c;
}

bool certified(const Hypersurface &v, const NodeCertificate &c, std::size_t rank) {
  return c.is_ordinary && c.hessian_rank == rank && revalidate(v, c).ok;
}

bool on_line_mod_p(const LinearSubspace &l, const FpPoint &x, std::uint32_t p) {
  const auto &e = l.equations();
  for (std::size_t i = 0; i < e.rows(); ++i) {
    unsigned long long s = 0;
    for (std::size_t j = 0; j < e.cols(); ++j) s = (s + reduce_mod(e(i, j), p) * static_cast<unsigned long long>(x[j])) % p;
    if (s) return false;
  }
  return true;
}

} // namespace

std::vector<long> parse_list(const std::string &s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception &) {
      throw std::invalid_argument("malformed integer '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("malformed integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<Check> segre_checks(const Options &) {
  std::vector<Check> out;
  auto s3 = build_variety(Kind::segre);
  auto loci = special_loci(Kind::segre);
  out.push_back(run_check("segre.nodes", "segre-cubic/nodes", [&](Check &c) {
    std::size_t ok = 0;
    for (const auto &n : loci.nodes) {
      auto r = certify_ordinary_node(s3, n.point);
      bool good = std::holds_alternative<NodeCertificate>(r) && certified(s3, std::get<NodeCertificate>(r), 4);
      ok += good;
      c.details["nodes"][n.label] = {{"point", n.point.str()}, {"ordinary_rank4", good}};
    }
    c.status = verdict(loci.nodes.size() == 10 && ok == 10);
    c.summary = std::to_string(ok) + " of " + std::to_string(loci.nodes.size()) + " nodes certified ordinary (Hessian rank 4)";
  }));
  out.push_back(run_check("segre.scan", "segre-cubic/finite-field-scan", [&](Check &c) {
    const std::uint32_t p = 11;
    auto r = singular_scan_fp(s3, p);
    std::set<FpPoint> expect;
    for (const auto &n : loci.nodes) expect.insert(reduce_point(n.point, p));
    bool same = std::set<FpPoint>(r.points.begin(), r.points.end()) == expect;
    c.details = {{"prime", std::to_string(p)}, {"kernel", std::string(simd::kernel_name(r.kernel))},
                 {"scanned", std::to_string(r.scanned)}, {"singular_points", fp_points(r.points)},
                 {"matches_nodes", same}};
    c.status = verdict(r.points.size() == 10 && same);
    c.summary = "F_11 scan: " + std::to_string(r.points.size()) + " singular points";
  }));
  return out;
}

std::vector<Check> cr_checks(const Options &) {
  std::vector<Check> out;
  auto cr = build_variety(Kind::cr);
  auto loci = special_loci(Kind::cr);
  out.push_back(run_check("cr.double_lines", "castelnuovo-richmond/double-lines", [&](Check &c) {
    std::size_t ok = 0;
    for (const auto &l : loci.double_lines) {
      bool h = verify_double_line(cr, l.space).holds();
      ok += h;
      c.details["lines"][l.label] = h;
    }
    c.status = verdict(loci.double_lines.size() == 15 && ok == 15);
    c.summary = std::to_string(ok) + " of 15 syntheme lines certified double";
  }));
  out.push_back(run_check("cr.scan", "castelnuovo-richmond/finite-field-scan", [&](Check &c) {
    const std::uint32_t p = 7;
    auto r = singular_scan_fp(cr, p);
    bool on_lines = std::all_of(r.points.begin(), r.points.end(), [&](const FpPoint &x) {
      return std::any_of(loci.double_lines.begin(), loci.double_lines.end(),
                         [&](const auto &l) { return on_line_mod_p(l.space, x, p); });
    });
    const std::size_t expected = 15 * (p + 1) - 30;
    c.details = {{"prime", std::to_string(p)}, {"scanned", std::to_string(r.scanned)},
                 {"singular_points", std::to_string(r.points.size())}, {"expected", std::to_string(expected)},
                 {"all_on_double_lines", on_lines}};
    c.status = verdict(r.points.size() == expected && on_lines);
    c.summary = "F_7 scan: " + std::to_string(r.points.size()) + " singular points";
  }));
  out.push_back(run_check("cr.cardinal", "castelnuovo-richmond/cardinal-tangency", [&](Check &c) {
    std::size_t squares = 0;
    bool quadric = false;
    for (const auto &t : configs::all_triples()) {
      auto r = cardinal_restriction(t);
      bool sq = r.scale * r.root * r.root == r.restricted;
      squares += sq;
      c.details["restrictions"][t.str()] = {{"square", sq}, {"scale", r.scale.str()}};
      if (t == configs::Triple({1, 2, 3})) {
        auto q = substitute_linear(cardinal_quadric(t), LinearMap(r.chart));
        auto k = scale_factor(q, r.root);
        quadric = k.has_value();
        if (k) c.details["quadric_scale"] = k->str();
      }
    }
    c.status = verdict(squares == 10 && quadric);
    c.summary = std::to_string(squares) + " of 10 cardinal restrictions are squares; root for 123 is the quadric: " +
                (quadric ? "yes" : "no");
  }));
  return out;
}

std::vector<Check> duality_checks(const Options &o) {
  std::vector<Check> out;
  out.push_back(run_check("duality.samples", "duality/traceless-square-map", [&](Check &c) {
    auto zs = sample_segre_points(o.samples, o.seed, o.max_height);
    std::size_t zero = 0;
    for (const auto &z : zs) zero += duality_image(z).on_cr();
    bool distinct = std::set<ProjectivePoint>(zs.begin(), zs.end()).size() == zs.size();
    c.details = {{"samples", std::to_string(zs.size())}, {"on_cr", std::to_string(zero)},
                 {"distinct", distinct}, {"max_height", std::to_string(o.max_height)}};
    if (!zs.empty()) c.details["first"] = zs.front().str();
    c.status = verdict(zs.size() == o.samples && zero == zs.size() && distinct);
    c.summary = std::to_string(zero) + " of " + std::to_string(o.samples) + " sampled points map onto CR4 exactly";
  }));
  out.push_back(run_check("duality.planes", "duality/planes-to-lines", [&](Check &c) {
    auto s = special_loci(Kind::segre);
    auto r = special_loci(Kind::cr);
    std::size_t ok = 0;
    for (const auto &pl : s.planes) {
      auto it = std::find_if(r.double_lines.begin(), r.double_lines.end(), [&](const auto &l) { return l.label == pl.label; });
      if (it == r.double_lines.end()) continue;
      std::set<ProjectivePoint> images;
      bool inside = true;
      for (auto [x, y, z] : {std::array<long, 3>{1, 2, 5}, {3, -1, 4}, {2, 7, -3}}) {
        QVector v = pl.space.basis() * QVector{Rational(x), Rational(y), Rational(z)};
        auto img = duality_image(ProjectivePoint(v)).image;
        inside = inside && it->space.contains(img.coords());
        images.insert(img);
      }
      bool good = inside && images.size() >= 2;
      ok += good;
      c.details[pl.label] = good;
    }
    c.status = verdict(s.planes.size() == 15 && ok == 15);
    c.summary = std::to_string(ok) + " of 15 planes map onto their syntheme lines";
  }));
  out.push_back(run_check("duality.nodes", "duality/nodes-to-cardinal-hyperplanes", [&](Check &c) {
    auto s = special_loci(Kind::segre);
    auto r = special_loci(Kind::cr);
    std::size_t ok = 0;
    for (const auto &n : s.nodes) {
      bool good = std::any_of(r.cardinal.begin(), r.cardinal.end(),
                              [&](const auto &h) { return h.label == n.label && h.point == n.point; });
      ok += good;
      c.details[n.label] = good;
    }
    c.status = verdict(ok == 10);
    c.summary = std::to_string(ok) + " of 10 nodes equal their cardinal hyperplanes";
  }));
  return out;
}

std::vector<Check> section_checks(const Options &o) {
  std::vector<Check> out;
  json coeffs = json::array();
  for (const auto &x : o.coeffs) coeffs.push_back(str(x));
  std::optional<SectionModel> model;
  out.push_back(run_check("section.genericity", "hyperplane-section/genericity", [&](Check &c) {
    c.details["coeffs"] = coeffs;
    try {
      model = hyperplane_section(o.coeffs);
      c.status = Status::pass;
      c.summary = "hyperplane is generic";
    } catch (const GenericityFailure &e) {
      c.status = Status::fail;
      c.details["condition"] = e.condition();
      c.details["error"] = e.what();
      c.summary = "genericity failure (" + e.condition() + "): " + e.what();
    }
  }));
  if (!model) return out;
  const auto &m = *model;
  auto x = m.surface();
  out.push_back(run_check("section.nodes", "hyperplane-section/fifteen-nodes", [&](Check &c) {
    std::size_t ok = 0;
    for (const auto &n : m.nodes) {
      bool good = certified(x, n.certificate, 3);
      ok += good;
      c.details[n.label()] = {{"point", n.point.str()}, {"ordinary", good}};
    }
    c.status = verdict(m.nodes.size() == 15 && ok == 15);
    c.summary = std::to_string(ok) + " of " + std::to_string(m.nodes.size()) + " nodes certified ordinary";
  }));
  out.push_back(run_check("section.tropes", "hyperplane-section/trope-conics", [&](Check &c) {
    std::size_t ok = 0;
    for (const auto &t : m.tropes) {
      bool good = t.nodes.size() == 6 && t.scale * t.conic * t.conic == t.restricted;
      ok += good;
      c.details[t.triple.str()] = {{"nodes", std::to_string(t.nodes.size())}, {"double_conic", good}};
    }
    c.status = verdict(m.tropes.size() == 10 && ok == 10);
    c.summary = std::to_string(ok) + " of " + std::to_string(m.tropes.size()) + " trope-conics through exactly 6 nodes";
  }));
  out.push_back(run_check("section.incidence", "hyperplane-section/incidence-model", [&](Check &c) {
    auto inc = m.incidence();
    auto type = inc.type();
    auto model_inc = configs::trope_incidence_model();
    auto iso = configs::incidence_isomorphic(inc, model_inc);
    bool ok = iso && configs::check_relabeling(inc, model_inc, *iso);
    c.details = {{"type", type ? type->str() : "irregular"}, {"isomorphic", ok}};
    c.status = verdict(ok);
    c.summary = std::string("incidence ") + (type ? type->str() : "irregular") + (ok ? " isomorphic" : " not isomorphic") +
                " to the (ai)(bj)(ck) model";
  }));
  out.push_back(run_check("section.scan", "hyperplane-section/finite-field-scan", [&](Check &c) {
    const std::uint32_t p = o.scan_prime;
    c.details["prime"] = std::to_string(p);
    try {
      auto r = singular_scan_fp(m, p);
      std::set<FpPoint> expect;
      for (const auto &n : m.nodes) expect.insert(reduce_point(n.chart_point, p));
      bool same = std::set<FpPoint>(r.points.begin(), r.points.end()) == expect;
      c.details["singular_points"] = fp_points(r.points);
      c.details["matches_nodes"] = same;
      c.status = verdict(r.points.size() == 15 && same);
      c.summary = "F_" + std::to_string(p) + " scan: " + std::to_string(r.points.size()) + " singular points";
    } catch (const BadPrime &e) {
      c.status = Status::fail;
      c.details["bad_reduction"] = e.what();
      try {
        auto raw = singular_scan_fp(x, p);
        c.details["raw_singular_points"] = std::to_string(raw.points.size());
        c.summary = "F_" + std::to_string(p) + ": bad reduction (" + e.what() + "); raw scan finds " +
                    std::to_string(raw.points.size()) + " singular points";
      } catch (const BadPrime &) {
        c.summary = "F_" + std::to_string(p) + ": bad reduction (" + e.what() + ")";
      }
    }
  }));
  return out;
}

std::vector<Check> tangent_checks(const Options &o) {
  return {run_check("tangent.nodes", "tangent-section/kummer", [&](Check &c) {
    auto m = sampled_tangent_section(o.seed, o.max_height);
    auto x = m.surface();
    std::size_t ok = 0;
    for (const auto &n : m.nodes) {
      bool good = certified(x, n.certificate, 3);
      ok += good;
      c.details["nodes"][n.label()] = {{"point", n.point.str()}, {"ordinary", good}};
    }
    json coeffs = json::array();
    for (const auto &v : m.coeffs) coeffs.push_back(str(v));
    c.details["coeffs"] = coeffs;
    c.status = verdict(m.nodes.size() == 16 && ok == 16);
    c.summary = std::to_string(ok) + " of " + std::to_string(m.nodes.size()) + " nodes certified on the tangent section";
  })};
}

std::vector<Check> lattice_checks(const Options &) {
  std::vector<Check> out;
  out.push_back(run_check("lattice.picard", "picard-lattice/overlattice", [&](Check &c) {
    const auto &m = pic();
    auto sig = m.lattice.signature();
    Integer det = abs(m.lattice.det());
    c.details = {{"rank", std::to_string(m.lattice.rank())}, {"abs_det", str(det)}, {"index", str(m.index)},
                 {"signature", {std::to_string(sig.positive), std::to_string(sig.negative)}},
                 {"even", m.lattice.is_even()}};
    c.status = verdict(m.lattice.rank() == 16 && det == 128 && m.lattice.is_even());
    c.summary = "rank " + std::to_string(m.lattice.rank()) + ", |det| " + str(det) + ", index " + str(m.index);
  }));
  out.push_back(run_check("lattice.discriminant", "picard-lattice/discriminant-form", [&](Check &c) {
    auto d = surface::compare_discriminants(pic());
    c.details = d.to_json();
    std::string f;
    for (const auto &x : d.pic.invariant_factors) f += (f.empty() ? "" : ",") + str(x);
    bool match = d.match_minus || d.match_plus;
    c.status = verdict(d.groups_isomorphic && match);
    c.summary = "invariant factors (" + f + "); form match with U(2)+U(2)+A1(2)+A1: " +
                (d.match_plus ? "q" : d.match_minus ? "-q" : "none");
  }));
  out.push_back(run_check("lattice.kummer", "picard-lattice/kummer-embedding", [&](Check &c) {
    auto k = surface::kummer_model();
    auto r = surface::kummer_embedding_check(pic(), k);
    c.details = r.to_json();
    c.status = verdict(r.holds());
    c.summary = std::string("embedding into [N0]^perp ") + (r.holds() ? "certified" : "failed") + ", |det| image " +
                str(r.det_image) + ", complement " + str(r.det_complement);
  }));
  out.push_back(run_check("divisors.degrees", "picard-lattice/divisor-degrees", [&](Check &c) {
    using surface::DivisorClass;
    auto ids = surface::standard_identities();
    std::size_t held = 0;
    for (const auto &i : ids) {
      held += i.holds();
      c.details["identities"][i.name] = i.holds();
    }
    auto B = surface::B_tilde();
    auto D = surface::degree20_class();
    auto b2 = surface::norm(B), beta = surface::degree(B), d2 = surface::norm(D);
    c.details["B~^2"] = b2.str();
    c.details["B~.eta"] = beta.str();
    c.details["(4eta*-eta)^2"] = d2.str();
    std::size_t pent = 0, pent_ok = 0;
    for (const auto &pc : classification().pentads) {
      if (!pc.admissible) continue;
      ++pent;
      pent_ok += pentads::pencil_classes(pc.pentad).holds();
    }
    c.details["pentad_pencils"] = std::to_string(pent_ok) + "/" + std::to_string(pent);
    bool ok = held == ids.size() && b2 == 10 && beta == 10 && d2 == 20 && pent_ok == pent;
    c.status = verdict(ok);
    c.summary = "B~^2 = " + b2.str() + ", B~.eta = " + beta.str() + ", (4eta*-eta)^2 = " + d2.str() + "; " +
                std::to_string(held) + "/" + std::to_string(ids.size()) + " identities; pencils ok for " +
                std::to_string(pent_ok) + "/" + std::to_string(pent) + " admissible pentads";
  }));
  return out;
}

std::vector<Check> code_checks(const Options &) {
  std::vector<Check> out;
  out.push_back(run_check("code.enumerator", "even-set-code/weight-enumerator", [&](Check &c) {
    auto code = surface::even_set_code();
    c.details = code.to_json();
    std::string e;
    for (auto [w, k] : code.node_weight_enumerator) e += (e.empty() ? "" : ", ") + std::to_string(w) + ":" + std::to_string(k);
    const std::map<int, int> expected{{0, 1}, {6, 10}, {8, 15}, {10, 6}};
    c.status = verdict(code.dimension == 5 && code.node_weight_enumerator == expected);
    c.summary = "dimension " + std::to_string(code.dimension) + ", node-weight enumerator {" + e + "}";
  }));
  out.push_back(run_check("code.orbits", "even-set-code/s6-orbits", [&](Check &c) {
    auto orbits = surface::code_word_orbits(surface::even_set_code());
    c.details = json::array();
    std::string s;
    for (const auto &o : orbits) {
      c.details.push_back({{"node_weight", std::to_string(o.node_weight)}, {"size", std::to_string(o.words.size())},
                           {"stabilizer_order", std::to_string(o.stabilizer_order)}});
      s += (s.empty() ? "" : ", ") + std::to_string(o.words.size());
    }
    c.status = verdict(orbits.size() == 3);
    c.summary = "S6-orbits on nonzero words of sizes " + s;
  }));
  return out;
}

std::vector<Check> involution_checks(const Options &) {
  std::vector<Check> out;
  const auto &m = pic();
  auto iso_check = [&](const involutions::PicIsometry &p, Check &c) {
    c.details = p.to_json(m);
    bool ok = p.certificate.involution();
    c.status = verdict(ok);
    c.summary = p.name + (ok ? " is an integral form-preserving involution" : " fails certification");
  };
  out.push_back(run_check("involutions.sigma", "involutions/sigma", [&](Check &c) { iso_check(involutions::sigma_star(m), c); }));
  out.push_back(run_check("involutions.reye", "involutions/reye-reflection", [&](Check &c) {
    auto r = involutions::tau_rey_star(m);
    iso_check(r.iso, c);
    std::size_t held = 0;
    for (const auto &i : r.images) {
      held += i.holds;
      c.details["image_formulas"][i.name] = i.holds;
    }
    bool ok = c.status == Status::pass && held == r.images.size() && r.images.size() == 6;
    c.status = verdict(ok);
    c.summary += "; " + std::to_string(held) + "/6 image formulas hold";
  }));
  out.push_back(run_check("involutions.pentads", "involutions/pentad-reflections", [&](Check &c) {
    std::size_t ok = 0, rank15 = 0, total = 0;
    for (const auto &pc : classification().pentads) {
      ++total;
      std::vector<configs::Duad> nodes(pc.pentad.begin(), pc.pentad.end());
      auto t = involutions::tau_pentad_star(m, nodes);
      ok += t.certificate.involution();
      rank15 += lattice::invariant_rank(t.matrix) == 15;
    }
    c.details = {{"pentads", std::to_string(total)}, {"certified", std::to_string(ok)}, {"invariant_rank_15", std::to_string(rank15)}};
    c.status = verdict(total == 3003 && ok == total && rank15 == total);
    c.summary = std::to_string(ok) + " of " + std::to_string(total) + " pentad reflections certified; invariant rank 15 for " +
                std::to_string(rank15);
  }));
  out.push_back(run_check("involutions.relations", "involutions/relations-and-lefschetz", [&](Check &c) {
    auto r = involutions::verify_relations(m);
    c.details = r.to_json();
    c.status = verdict(r.holds() && r.lefschetz == 10 && r.invariant_rank_rey == 15);
    c.summary = std::string("sigma tau_Rey sigma = tau_C: ") + (r.conjugation_identity ? "yes" : "no") +
                "; Lefschetz number " + str(r.lefschetz) + " (assuming -1 on T)";
  }));
  return out;
}

std::vector<Check> pentad_checks(const Options &o) {
  std::vector<Check> out;
  const auto &cl = classification();
  out.push_back(run_check("pentads.classification", "pentads/classification", [&](Check &c) {
    c.details = cl.to_json();
    c.status = verdict(cl.pentads.size() == 3003 && cl.goepel_count == 6);
    c.summary = std::to_string(cl.pentads.size()) + " pentads, " + std::to_string(cl.admissible_count) + " admissible, " +
                std::to_string(cl.goepel_count) + " Goepel, " + std::to_string(cl.orbits.size()) + " S6-orbits";
  }));
  out.push_back(run_check("pentads.example", "pentads/type-ii-example", [&](Check &c) {
    using configs::Duad;
    auto p = pentads::classify(pentads::make_pentad({Duad(1, 5), Duad(2, 3), Duad(3, 4), Duad(3, 5), Duad(4, 5)}));
    std::set<std::string> tropes;
    for (const auto &t : p.trope_triples) {
      tropes.insert("sigma(E" + t.trope.str() + ")");
      c.details["trope_triples"].push_back("sigma(E" + t.trope.str() + "): " + t.nodes[0].str() + "," + t.nodes[1].str() +
                                           "," + t.nodes[2].str());
    }
    c.details["fiber_hints"] = pentads::fiber_hints(p);
    const std::set<std::string> expected{"sigma(E12)", "sigma(E15)", "sigma(E23)"};
    c.status = verdict(p.admissible && p.trope_triples.size() == 3 && tropes == expected);
    std::string s;
    for (const auto &t : tropes) s += (s.empty() ? "" : ", ") + t;
    c.summary = pentads::pentad_str(p.pentad) + ": " + std::to_string(p.trope_triples.size()) + " trope-triples on " + s;
  }));
  if (o.crosscheck_graph)
    out.push_back(run_check("pentads.graph_crosscheck", "pentads/graph-criterion", [&](Check &c) {
      auto g = pentads::graph_criterion_crosscheck(cl);
      c.details = g.to_json();
      std::size_t best = 0;
      for (std::size_t i = 0; i + 1 < g.readings.size(); ++i) best = std::max(best, g.readings[i].agree);
      const auto &derived = g.readings.back();
      c.status = Status::pass;
      c.summary = std::to_string(g.readings.size() - 1) + " literal readings agree with incidence on at most " +
                  std::to_string(best) + "/" + std::to_string(cl.pentads.size()) + "; four-edge rule " +
                  std::to_string(derived.agree) + "/" + std::to_string(cl.pentads.size()) + "; triple rule " +
                  std::to_string(g.triple_rule_agree) + "/" + std::to_string(g.triple_rule_agree + g.triple_rule_disagree);
    }));
  return out;
}

std::vector<Check> congruence_checks(const Options &o) {
  std::vector<Check> out;
  out.push_back(run_check("congruence.invariants", "congruences/invariants", [&](Check &c) {
    auto inv = congruence::invariants(o.m, o.n, o.r);
    c.details = inv.to_json();
    bool ok = true;
    if (o.m == 2 && o.r == o.n - 2 && o.n <= 7) {
      auto p = congruence::two_n_profile(o.n);
      c.details["two_n_profile"] = p.to_json();
      ok = p.consistent();
    }
    c.status = verdict(ok);
    c.summary = "(" + std::to_string(o.m) + "," + std::to_string(o.n) + "), r=" + std::to_string(o.r) + ": g " +
                std::to_string(inv.g) + ", deg focal " + std::to_string(inv.deg_focal) + ", deg|l| " +
                std::to_string(inv.deg_l_curve) + ", deg P " + std::to_string(inv.deg_P_surface) + ", branch " +
                std::to_string(inv.deg_branch_locus);
  }));
  out.push_back(run_check("congruence.sweep", "congruences/consistency-and-duality", [&](Check &c) {
    std::size_t rows = 0, bad = 0;
    for (long m = 2; m <= 8; ++m)
      for (long n = 2; n <= 8; ++n)
        for (long r = 0; r <= (m - 1) * (n - 1); ++r) {
          auto a = congruence::invariants(m, n, r);
          auto b = congruence::invariants(n, m, r);
          ++rows;
          bad += !(a.g == b.g && a.deg_l_curve == b.deg_P_surface && a.deg_P_surface == b.deg_l_curve &&
                   a.deg_branch_locus == b.deg_branch_locus);
        }
    c.details = {{"rows", std::to_string(rows)}, {"duality_failures", std::to_string(bad)}};
    c.status = verdict(bad == 0);
    c.summary = "m,n in [2,8]: " + std::to_string(rows) + " rows consistent, duality failures " + std::to_string(bad);
  }));
  return out;
}

std::vector<Check> table1_checks(const Options &o) {
  std::vector<Check> out;
  std::vector<long> ns;
  if (o.table_n) ns = {*o.table_n};
  else ns = {2, 3, 4, 5, 6, 7};
  for (long n : ns)
    out.push_back(run_check("table1.n" + std::to_string(n), "congruences/singular-point-table", [&](Check &c) {
      auto r = congruence::table1_report(n);
      c.details = r.to_json();
      c.status = verdict(r.columns_present);
      std::string s;
      for (const auto &a : r.with_count) s += " " + congruence::alpha_str(a);
      c.summary = "n=" + std::to_string(n) + ": solutions" + s + (r.columns_present ? "; table columns present" : "; columns missing");
    }));
  return out;
}

std::vector<Check> all_checks(const Options &o) {
  Options d;
  d.seed = o.seed;
  d.max_height = o.max_height;
  d.samples = o.samples;
  std::vector<Check> out;
  for (auto f : {segre_checks, cr_checks, duality_checks, section_checks, tangent_checks, code_checks, lattice_checks,
                 involution_checks, pentad_checks, congruence_checks, table1_checks}) {
    auto part = f(d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

} // namespace nodal::cli
