#include "koszul/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "koszul/error.hpp"

namespace koszul {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void bad(std::string const& field, std::string const& message) {
  fail(ErrorCode::ParseError, field + ": " + message);
}

void only_keys(json const& obj, std::string const& field, std::set<std::string> const& allowed) {
  for (auto const& [key, _] : obj.items())
    if (!allowed.contains(key)) bad(field, "unknown key '" + key + "'");
}

Rational parse_coeff(json const& c, std::string const& field) {
  if (c.is_number_integer()) return Rational(c.get<std::int64_t>());
  if (!c.is_string()) bad(field, "coefficient must be a \"p/q\" string or an integer");
  try {
    return Rational::parse(c.get<std::string>());
  } catch (Error const& e) {
    bad(field, e.message());
  }
}

// Terms of one element of T(V); word lengths are checked by the caller.
FilteredElement parse_terms(json const& terms, std::string const& field, std::map<std::string, std::uint32_t> const& index,
                            std::size_t n, std::size_t max_length, bool exact) {
  if (!terms.is_array()) bad(field, "expected a list of terms");
  FilteredElement f(n);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string tf = field + "[" + std::to_string(t) + "]";
    json const& term = terms[t];
    if (!term.is_object()) bad(tf, "expected an object with 'word' and 'coeff'");
    only_keys(term, tf, {"word", "coeff"});
    if (!term.contains("word")) bad(tf, "missing 'word'");
    if (!term.contains("coeff")) bad(tf, "missing 'coeff'");
    json const& word = term["word"];
    if (!word.is_array()) bad(tf + ".word", "expected a list of generator names");
    Word w;
    for (std::size_t k = 0; k < word.size(); ++k) {
      std::string wf = tf + ".word[" + std::to_string(k) + "]";
      if (!word[k].is_string()) bad(wf, "expected a generator name");
      auto it = index.find(word[k].get<std::string>());
      if (it == index.end()) bad(wf, "unknown generator '" + word[k].get<std::string>() + "'");
      w.push_back(it->second);
    }
    if (exact && w.size() != max_length)
      bad(tf + ".word", "length " + std::to_string(w.size()) + " differs from relation_degree " + std::to_string(max_length));
    if (!exact && w.size() >= max_length)
      bad(tf + ".word", "tail words must be shorter than relation_degree " + std::to_string(max_length));
    f.add(TensorElement::word(n, w, parse_coeff(term["coeff"], tf + ".coeff")));
  }
  return f;
}

ojson terms_json(TensorElement const& t, std::vector<std::string> const& names) {
  ojson out = ojson::array();
  for (auto const& [w, c] : t.terms()) {
    ojson word = ojson::array();
    for (auto letter : w) word.push_back(names[letter]);
    ojson term;
    term["word"] = word;
    term["coeff"] = c.str();
    out.push_back(term);
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) bad("<root>", "expected an object");
  only_keys(doc, "<root>", {"generators", "relation_degree", "relations", "deformation"});

  AlgebraFile f;
  if (!doc.contains("generators") || !doc["generators"].is_array()) bad("generators", "expected a list of names");
  std::map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    json const& g = doc["generators"][i];
    std::string gf = "generators[" + std::to_string(i) + "]";
    if (!g.is_string() || g.get<std::string>().empty()) bad(gf, "expected a nonempty name");
    std::string name = g.get<std::string>();
    if (!index.emplace(name, static_cast<std::uint32_t>(i)).second) bad(gf, "duplicate generator '" + name + "'");
    f.generators.push_back(name);
  }
  if (f.generators.empty()) bad("generators", "at least one generator is required");
  std::size_t n = f.generators.size();

  if (!doc.contains("relation_degree") || !doc["relation_degree"].is_number_unsigned() ||
      doc["relation_degree"].get<std::size_t>() < 1)
    bad("relation_degree", "expected a positive integer");
  f.relation_degree = doc["relation_degree"].get<std::size_t>();

  if (!doc.contains("relations") || !doc["relations"].is_array()) bad("relations", "expected a list");
  for (std::size_t i = 0; i < doc["relations"].size(); ++i) {
    json const& r = doc["relations"][i];
    std::string rf = "relations[" + std::to_string(i) + "]";
    if (!r.is_object()) bad(rf, "expected an object with 'terms'");
    only_keys(r, rf, {"terms"});
    if (!r.contains("terms")) bad(rf, "missing 'terms'");
    FilteredElement e = parse_terms(r["terms"], rf + ".terms", index, n, f.relation_degree, true);
    f.relations.push_back(e.part(f.relation_degree));
  }

  if (doc.contains("deformation")) {
    json const& d = doc["deformation"];
    if (!d.is_array()) bad("deformation", "expected one list of terms per relation");
    if (d.size() != f.relations.size())
      bad("deformation", "has " + std::to_string(d.size()) + " entries for " + std::to_string(f.relations.size()) +
                             " relations");
    for (std::size_t i = 0; i < d.size(); ++i)
      f.tails.push_back(parse_terms(d[i], "deformation[" + std::to_string(i) + "]", index, n, f.relation_degree, false));
  }
  return f;
}

AlgebraFile read_algebra_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

nlohmann::ordered_json to_json(AlgebraFile const& f) {
  nlohmann::ordered_json out;
  out["generators"] = f.generators;
  out["relation_degree"] = f.relation_degree;
  ojson rel = ojson::array();
  for (auto const& r : f.relations) {
    ojson entry;
    entry["terms"] = terms_json(r, f.generators);
    rel.push_back(entry);
  }
  out["relations"] = rel;
  if (f.has_deformation()) {
    ojson def = ojson::array();
    for (auto const& t : f.tails) {
      ojson terms = ojson::array();
      for (int d = t.top_degree(); d >= 0; --d)
        for (auto const& term : terms_json(t.part(static_cast<std::size_t>(d)), f.generators)) terms.push_back(term);
      def.push_back(terms);
    }
    out["deformation"] = def;
  }
  return out;
}

std::string serialize(AlgebraFile const& f) { return to_json(f).dump(2) + "\n"; }

HomogeneousAlgebra to_algebra(AlgebraFile const& f) {
  return HomogeneousAlgebra::create(f.generators, f.relation_degree, f.relations);
}

Deformation to_deformation(AlgebraFile const& f) {
  if (!f.has_deformation()) return Deformation::trivial(to_algebra(f));
  std::vector<FilteredElement> rel;
  for (std::size_t i = 0; i < f.relations.size(); ++i) rel.push_back(FilteredElement(f.relations[i]) + f.tails[i]);
  return Deformation::from_relations(f.generators, f.relation_degree, rel);
}

AlgebraFile from_algebra(HomogeneousAlgebra const& a) {
  return AlgebraFile{a.names(), a.relation_degree(), a.relations(), {}};
}

AlgebraFile from_deformation(Deformation const& u) {
  AlgebraFile f = from_algebra(u.base());
  for (std::size_t i = 0; i < f.relations.size(); ++i) {
    FilteredElement tail(u.base().n());
    for (std::size_t k = 1; k <= u.base().relation_degree(); ++k) tail.add(u.tail_of(k, i));
    f.tails.push_back(tail);
  }
  return f;
}

nlohmann::ordered_json to_json(Matrix const& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

nlohmann::ordered_json to_json(Vector const& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (auto const& x : v) out.push_back(x.str());
  return out;
}

}  // namespace koszul
