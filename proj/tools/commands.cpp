#include "commands.hpp"

#include <sstream>

#include "koszul/curved_dual.hpp"
#include "koszul/dim2.hpp"
#include "koszul/dim3.hpp"
#include "koszul/error.hpp"
#include "koszul/frobenius.hpp"
#include "koszul/io.hpp"

namespace koszul::cli {

namespace {

using json = nlohmann::ordered_json;

json strings(std::vector<FilteredElement> const& v, std::vector<std::string> const& names) {
  json out = json::array();
  for (auto const& f : v) out.push_back(to_string(f, names));
  return out;
}

json strings(std::vector<TensorElement> const& v, std::vector<std::string> const& names) {
  json out = json::array();
  for (auto const& t : v) out.push_back(to_string(t, names));
  return out;
}

json map_json(AffineMap const& m, std::vector<std::string> const& names) {
  json out;
  out["linear"] = to_json(m.linear);
  out["constant"] = to_json(m.constant);
  json images = json::array();
  for (std::size_t j = 0; j < m.n(); ++j) images.push_back(names[j] + " -> " + to_string(m.image_of_generator(j), names));
  out["images"] = images;
  out["identity"] = m.is_identity();
  return out;
}

std::string word_label(Word const& w, std::vector<std::string> const& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + names[w[k]];
  return s;
}

std::string resolve_dim(Options const& o, HomogeneousAlgebra const& a) {
  if (o.dim == "2" || o.dim == "3" || o.dim == "general") return o.dim;
  if (o.dim != "auto") fail(ErrorCode::InvalidArgument, "--dim must be 2, 3 or general");
  if (a.relation_degree() == 2 && a.relation_count() == 1) return "2";
  if (a.relation_count() == a.n()) return "3";
  return "general";
}

// Top degree of A^!, searched up to --max-degree when --gldim is absent.
std::size_t resolve_gldim(Options const& o, HomogeneousAlgebra const& a, json& r) {
  if (o.gldim) {
    r["gldim_source"] = "flag";
    return *o.gldim;
  }
  GradedQuotient q(koszul_dual(a));
  for (std::size_t m = 1; m <= o.max_degree; ++m)
    if (q.dim(m) == 0) {
      r["gldim_source"] = "inferred from the top degree of A^!";
      return m - 1;
    }
  fail(ErrorCode::InvalidArgument,
       "A^! is nonzero up to degree " + std::to_string(o.max_degree) + "; pass --gldim");
}

json cmd_dual(AlgebraFile const& f, json& r) {
  HomogeneousAlgebra d = koszul_dual(to_algebra(f));
  if (f.has_deformation()) r["warnings"].push_back("deformation section ignored");
  r["dual_relations"] = strings(d.relations(), d.names());
  r["dual"] = to_json(from_algebra(d));
  return r;
}

json cmd_pbw(Options const& o, AlgebraFile const& f, json& r) {
  if (!f.has_deformation()) fail(ErrorCode::InvalidArgument, "pbw needs a deformation section");
  Deformation u = to_deformation(f);
  std::size_t N = u.base().relation_degree();
  std::size_t slack = o.slack.value_or(N + 1);
  auto const& names = u.base().names();
  std::optional<bool> bg_holds;
  if (N == 2) {
    BGReport bg = bg_check(u);
    bg_holds = bg.holds;
    json b;
    b["holds"] = bg.holds;
    b["j1"] = bg.j1;
    b["j2"] = bg.j2;
    b["j3"] = bg.j3;
    b["c3_dim"] = bg.c3_dim;
    b["failing_condition"] = bg.failing_condition.empty() ? json(nullptr) : json(bg.failing_condition);
    b["witness"] = bg.witness ? json(to_string(*bg.witness, names)) : json(nullptr);
    b["defect"] = bg.defect ? json(to_string(*bg.defect, names)) : json(nullptr);
    r["jacobi"] = b;
  }
  PBWReport p = pbw_check(u, o.max_degree, slack);
  json b;
  b["holds"] = p.holds;
  b["max_degree"] = o.max_degree;
  b["slack"] = p.slack;
  b["verified_up_to"] = p.verified_up_to;
  b["first_failure"] = p.first_failure ? json(*p.first_failure) : json(nullptr);
  b["filtered_dims"] = p.filtered_dims;
  b["expected_dims"] = p.expected_dims;
  r["bounded"] = b;
  r["pbw"] = p.holds;
  if (bg_holds && *bg_holds != p.holds)
    r["warnings"].push_back("the Jacobi conditions and the bounded test disagree; raise --max-degree or --slack");
  return r;
}

json dim2_section(Dim2Deformation const& d) {
  json out;
  out["Q"] = to_json(d.base.Q());
  out["s"] = to_json(d.s);
  out["c"] = d.c.str();
  return out;
}

json dim3_section(Dim3Algebra const& d, HomogeneousAlgebra const& a) {
  json out;
  out["relation_order"] = strings(a.relations(), a.names());
  out["z"] = to_string(d.z, a.names());
  out["Q1"] = to_json(d.Q1);
  out["Q2"] = to_json(d.Q2);
  if (!d.P.empty()) {
    json p = json::array();
    for (auto const& m : d.P) p.push_back(to_json(m));
    out["P"] = p;
  }
  return out;
}

Dim3Options dim3_options(Options const& o, Deformation const& u) {
  Dim3Options opts;
  opts.require_pbw = !u.is_trivial();
  opts.pbw_degree = o.max_degree;
  return opts;
}

json cmd_nakayama(Options const& o, AlgebraFile const& f, json& r) {
  Deformation u = to_deformation(f);
  auto const& names = u.base().names();
  std::string dim = resolve_dim(o, u.base());
  r["dim"] = dim;
  AffineMap map;
  if (dim == "2") {
    Dim2Deformation d = Dim2Deformation::from_deformation(u);
    r["dim2"] = dim2_section(d);
    map = nakayama_deformed(d);
  } else if (dim == "3") {
    Dim3Algebra d = build_dim3(u.base());
    json s = dim3_section(d, u.base());
    s["k"] = to_json(u.is_trivial() ? Vector(u.base().n()) : psi_vector(u, d));
    r["dim3"] = s;
    map = u.is_trivial() ? nakayama_graded3(d) : nakayama_deformed3(u, d, dim3_options(o, u));
  } else {
    std::size_t d = resolve_gldim(o, u.base(), r);
    GeneralNakayama g = nakayama_deformation_general(u, d);
    json s;
    s["gldim"] = g.gldim;
    s["P"] = to_json(g.P);
    s["lambda"] = to_json(g.lambda);
    r["general"] = s;
    map = g.map;
  }
  r["nakayama"] = map_json(map, names);
  r["relations_preserved"] = preserves_span(map, u.deformed_relations());
  if (!u.is_trivial()) r["caveat"] = "unique up to inner automorphisms";
  return r;
}

json cmd_cy(Options const& o, AlgebraFile const& f, json& r) {
  Deformation u = to_deformation(f);
  auto const& names = u.base().names();
  std::string dim = resolve_dim(o, u.base());
  r["dim"] = dim;
  bool cy = false;
  if (dim == "2") {
    Dim2Deformation d = Dim2Deformation::from_deformation(u);
    r["dim2"] = dim2_section(d);
    r["nakayama"] = map_json(nakayama_deformed(d), names);
    r["criterion"] = "Q antisymmetric and s = 0";
    cy = cy_deformed(d);
  } else if (dim == "3") {
    Dim3Algebra d = build_dim3(u.base());
    r["dim3"] = dim3_section(d, u.base());
    bool base_cy = cy_check3(d);
    r["base_cy"] = base_cy;
    r["z_superpotential"] = is_superpotential(d.z);
    if (u.is_trivial()) {
      r["criterion"] = "Q1 = Q2^t";
      r["nakayama"] = map_json(nakayama_graded3(d), names);
      cy = base_cy;
    } else {
      AffineMap chi = nakayama_deformed3(u, d, dim3_options(o, u));
      r["nakayama"] = map_json(chi, names);
      json compat = json::array();
      for (bool b : compat_check(u, d)) compat.push_back(b);
      r["tails_compatible"] = compat;
      r["criterion"] = "Nakayama automorphism is the identity";
      cy = chi.is_identity();
    }
  } else {
    std::size_t d = resolve_gldim(o, u.base(), r);
    GeneralNakayama g = nakayama_deformation_general(u, d);
    r["gldim"] = d;
    r["nakayama"] = map_json(g.map, names);
    r["criterion"] = "Nakayama automorphism is the identity";
    cy = g.map.is_identity();
    if (u.is_augmented()) {
      try {
        CYVerdict v = cy_check_augmented(u, d);
        r["derivation_criterion"] = v.cy;
        r["derivation_reason"] = v.reason;
      } catch (Error const& e) {
        if (e.code() != ErrorCode::BaseNotCY) throw;
        r["derivation_criterion"] = nullptr;
        r["derivation_reason"] = e.message();
      }
    } else {
      ThetaTransferReport t = theta_central_and_transfer(u, d);
      json s;
      s["theta_central"] = t.central;
      s["augmented"] = t.augmented ? json(strings(t.augmented->deformed_relations(), names)) : json(nullptr);
      s["nakayama_shared"] = t.nakayama_shared;
      s["augmented_cy"] = t.augmented_cy ? json(*t.augmented_cy) : json(nullptr);
      s["transfer"] = t.cy ? json(*t.cy) : json(nullptr);
      s["caveat"] = t.caveat;
      r["theta"] = s;
    }
  }
  r["cy"] = cy;
  return r;
}

json cmd_potential(Options const& o, AlgebraFile const& f, json& r) {
  Deformation u = to_deformation(f);
  auto const& names = u.base().names();
  if (resolve_dim(o, u.base()) != "3") fail(ErrorCode::InvalidArgument, "potentials need a global dimension 3 candidate");
  std::size_t n = u.base().n();
  std::size_t N = u.base().relation_degree();
  Dim3Algebra d = build_dim3(u.base());
  r["dim3"] = dim3_section(d, u.base());
  r["z_superpotential"] = is_superpotential(d.z);
  Potential w = build_potential_cy(u, d);
  r["potential"] = to_string(w, names);
  json parts;
  for (int k = w.top_degree(); k >= 1; --k)
    if (!w.part(static_cast<std::size_t>(k)).is_zero())
      parts[std::to_string(k)] = to_string(w.part(static_cast<std::size_t>(k)), names);
  r["potential_parts"] = parts;
  Deformation back = relations_from_potential(w, n, N, names);
  r["derived_relations"] = strings(back.deformed_relations(), names);
  std::vector<SparseVec> a, b;
  for (auto const& x : u.deformed_relations()) a.push_back(x.flatten(N));
  for (auto const& x : back.deformed_relations()) b.push_back(x.flatten(N));
  std::size_t dim = filtered_offset(n, N + 1);
  bool same = Subspace::span(dim, a) == Subspace::span(dim, b);
  if (!same) fail(ErrorCode::PotentialCheckFailed, "derivatives of the potential do not span the relations");
  r["round_trip"] = same;
  return r;
}

json cmd_frobenius(Options const& o, AlgebraFile const& f, json& r) {
  HomogeneousAlgebra a = to_algebra(f);
  std::size_t d = resolve_gldim(o, a, r);
  HomogeneousAlgebra dual = koszul_dual(a);
  GradedQuotient q(dual);
  GradedFiniteAlgebra b = GradedFiniteAlgebra::from_quotient(q, d);
  FrobeniusData fr = frobenius_detect(b);
  r["length"] = fr.length;
  r["dims"] = b.dims();
  json basis = json::array();
  for (std::size_t m = 0; m <= d; ++m) {
    json row = json::array();
    for (auto const& w : q.representative_words(m)) row.push_back(word_label(w, dual.names()));
    basis.push_back(row);
  }
  r["basis"] = basis;
  json pairing = json::array(), nakayama = json::array();
  for (std::size_t i = 0; i <= d; ++i) {
    pairing.push_back(to_json(fr.pairing[i]));
    nakayama.push_back(to_json(fr.nakayama[i]));
  }
  r["pairing"] = pairing;
  r["nakayama"] = nakayama;
  r["graded_symmetric"] = is_graded_symmetric(fr);
  return r;
}

void render(std::ostringstream& os, json const& j, std::size_t indent);

std::string scalar_text(json const& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat(json const& v) {
  if (!v.is_array()) return false;
  for (auto const& x : v)
    if (x.is_structured()) return false;
  return true;
}

std::string flat_text(json const& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
  return s + "]";
}

void render_value(std::ostringstream& os, std::string const& head, json const& v, std::size_t indent) {
  std::string pad(indent, ' ');
  if (!v.is_structured()) {
    os << pad << head << scalar_text(v) << "\n";
  } else if (is_flat(v)) {
    os << pad << head << flat_text(v) << "\n";
  } else {
    std::string h = head;
    while (!h.empty() && h.back() == ' ') h.pop_back();
    os << pad << h << "\n";
    render(os, v, indent + 2);
  }
}

void render(std::ostringstream& os, json const& j, std::size_t indent) {
  if (j.is_object()) {
    for (auto const& [k, v] : j.items()) render_value(os, k + ": ", v, indent);
  } else {
    for (auto const& v : j) render_value(os, "- ", v, indent);
  }
}

}  // namespace

json report(Options const& o, std::string const& file_text) {
  AlgebraFile f = parse_algebra_file(file_text);
  json r;
  r["command"] = o.command;
  json in;
  in["generators"] = f.generators;
  in["relation_degree"] = f.relation_degree;
  in["relations"] = strings(f.relations, f.generators);
  if (f.has_deformation()) in["deformed_relations"] = strings(to_deformation(f).deformed_relations(), f.generators);
  r["input"] = in;
  r["warnings"] = json::array();
  if (o.command == "dual") return cmd_dual(f, r);
  if (o.command == "pbw") return cmd_pbw(o, f, r);
  if (o.command == "nakayama") return cmd_nakayama(o, f, r);
  if (o.command == "cy") return cmd_cy(o, f, r);
  if (o.command == "potential") return cmd_potential(o, f, r);
  if (o.command == "frobenius") return cmd_frobenius(o, f, r);
  fail(ErrorCode::InvalidArgument, "unknown command '" + o.command + "'");
}

std::string render_text(json const& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

Outcome run(Options const& o, std::string const& file_text) {
  Outcome out;
  try {
    json r = report(o, file_text);
    out.out = o.format == "json" ? r.dump(2) + "\n" : render_text(r);
  } catch (Error const& e) {
    out.exit_code = static_cast<int>(e.error_class());
    out.err = std::string("error: ") + e.what() + "\n";
  } catch (std::exception const& e) {
    out.exit_code = static_cast<int>(ErrorClass::Inconsistency);
    out.err = std::string("error: internal: ") + e.what() + "\n";
  }
  return out;
}

}  // namespace koszul::cli
