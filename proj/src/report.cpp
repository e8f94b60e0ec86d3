#include "repgeo/report.hpp"

#include <sstream>

#include "repgeo/textio.hpp"

namespace repgeo {

namespace {

Json element_map(const FiniteGroup& domain, const FiniteGroup& codomain,
                 const std::vector<Element>& image) {
  Json out = Json::object();
  for (Element g = 0; g < domain.order(); ++g) out[domain.name(g)] = codomain.name(image[g]);
  return out;
}

const char* error_type(const Error& e) {
  if (dynamic_cast<const UnknownVariable*>(&e)) return "UnknownVariable";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const NotAGroup*>(&e)) return "NotAGroup";
  if (dynamic_cast<const NotAnAction*>(&e)) return "NotAnAction";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const NotNormal*>(&e)) return "NotNormal";
  if (dynamic_cast<const EnumerationCapExceeded*>(&e)) return "EnumerationCapExceeded";
  if (dynamic_cast<const SearchSpaceCapExceeded*>(&e)) return "SearchSpaceCapExceeded";
  if (dynamic_cast<const ContextMismatch*>(&e)) return "ContextMismatch";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  return "Error";
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_leaf(const Json& j) {
  return !j.is_structured() || j.empty();
}

bool is_block(const Json& j) {
  return j.is_string() && j.get<std::string>().find('\n') != std::string::npos;
}

void render_block(const std::string& text, const std::string& pad, std::ostringstream& os) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) os << pad << "  " << line << "\n";
}

void render(const Json& j, std::size_t indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_block(value)) {
        os << pad << key << ": |\n";
        render_block(value.get<std::string>(), pad, os);
      } else if (is_leaf(value)) {
        os << pad << key << ": " << (value.is_structured() ? value.dump() : scalar_text(value))
           << "\n";
      } else {
        os << pad << key << ":\n";
        render(value, indent + 2, os);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& value : j) {
      if (is_leaf(value)) {
        os << pad << "- " << (value.is_structured() ? value.dump() : scalar_text(value)) << "\n";
      } else {
        std::ostringstream inner;
        render(value, indent + 2, inner);
        std::string text = inner.str();
        // Put the first line on the dash.
        os << pad << "- " << text.substr(indent + 2);
      }
    }
    return;
  }
  os << pad << scalar_text(j) << "\n";
}

}  // namespace

Json to_json(const Representation& rep, const FreeContext& context, const Assignment& asg) {
  Json out = Json::object();
  for (std::size_t i = 0; i < asg.xmap.size(); ++i) out[context.xvars()[i]] = to_string(asg.xmap[i]);
  for (std::size_t i = 0; i < asg.ymap.size(); ++i) {
    out[context.yvars()[i]] = rep.group().name(asg.ymap[i]);
  }
  return out;
}

Json to_json(const GroupHom& h) { return element_map(h.domain, h.codomain, h.image); }

Json to_json(const RepHom& h) {
  return Json{{"matrix", to_string(h.matrix)},
              {"group", element_map(h.grouphom.domain, h.grouphom.codomain, h.grouphom.image)}};
}

Json to_json(const GroupSeparation& cert) {
  Json homs = Json::array();
  for (const auto& h : cert.homs) homs.push_back(to_json(h));
  return Json{{"homs", homs}, {"verified", verify_separation(cert)}};
}

Json to_json(const RepSeparation& cert) {
  Json homs = Json::array();
  for (const auto& h : cert.homs) homs.push_back(to_json(h));
  return Json{{"homs", homs}, {"verified", verify_separation(cert)}};
}

Json to_json(const SearchBounds& b) {
  return Json{{"max_xvars", b.max_xvars},         {"max_yvars", b.max_yvars},
              {"max_system_size", b.max_system_size}, {"max_terms", b.max_terms},
              {"max_word_length", b.max_word_length}, {"max_premises", b.max_premises}};
}

Json to_json(const InseparablePair& pair, std::size_t side) {
  return Json{{"side", side == 0 ? "first" : "second"},
              {"sort", pair.sort == InseparablePair::Sort::vector ? "vector" : "group"},
              {"points", Json::array({pair.first, pair.second})}};
}

Json to_json(const FaithfulImage& image) {
  Json kernel = Json::array();
  const auto& g = image.original.group();
  for (Element e = 0; e < g.order(); ++e) {
    if (image.sigma[e] == kIdentity) kernel.push_back(g.name(e));
  }
  Json cosets = Json::object();
  for (Element e = 0; e < g.order(); ++e) cosets[g.name(e)] = image.quotient.group().name(image.sigma[e]);
  return Json{{"kernel", kernel}, {"projection", cosets}, {"image", serialize(image.quotient)}};
}

Json to_json(const Error& e) {
  Json out{{"type", error_type(e)}, {"message", e.message()}};
  if (e.span()) {
    out["span"] = Json{{"line", e.span()->line},
                       {"column", e.span()->column},
                       {"length", e.span()->length}};
  }
  return out;
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace repgeo
