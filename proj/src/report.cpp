#include "nsep/report.hpp"

#include <sstream>

namespace nsep {
namespace {

Json json_row(const EvaluationRow& row) {
  Json j;
  j["invariant"] = render(row.f);
  j["degree"] = row.f.degree();
  if (row.at_v == row.at_w) {
    j["value"] = row.at_v;
  } else {
    j["at_v"] = row.at_v;
    j["at_w"] = row.at_w;
  }
  return j;
}

const char* kind_name(SeparationCertificate::Kind k) {
  switch (k) {
    case SeparationCertificate::Kind::kWitnessLowerBound: return "witness-lower-bound";
    case SeparationCertificate::Kind::kRadicalUpperBound: return "radical-upper-bound";
    case SeparationCertificate::Kind::kPairwiseScan: return "pairwise-scan";
  }
  return "?";
}

void flatten_tsv(const Json& node, const std::string& path, std::ostream& os) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it)
      flatten_tsv(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i)
      flatten_tsv(node[i], path + "[" + std::to_string(i) + "]", os);
  } else if (node.is_string()) {
    os << path << '\t' << node.get<std::string>() << '\n';
  } else {
    os << path << '\t' << node.dump() << '\n';
  }
}

void outline(const Json& node, int depth, std::ostream& os) {
  std::string pad(std::size_t(depth) * 2, ' ');
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << pad << it.key() << ":\n";
        outline(it.value(), depth + 1, os);
      } else if (it.value().is_string()) {
        os << pad << it.key() << ": " << it.value().get<std::string>() << '\n';
      } else {
        os << pad << it.key() << ": " << it.value().dump() << '\n';
      }
    }
  } else if (node.is_array()) {
    for (const auto& item : node) {
      if (item.is_object() || item.is_array()) {
        os << pad << "-\n";
        outline(item, depth + 1, os);
      } else if (item.is_string()) {
        os << pad << "- " << item.get<std::string>() << '\n';
      } else {
        os << pad << "- " << item.dump() << '\n';
      }
    }
  } else {
    os << pad << node.dump() << '\n';
  }
}

}  // namespace

Json json_module(const ModuleSpec& m) {
  Json j;
  j["dimension"] = m.dimension();
  Json blocks = Json::array();
  for (const auto& b : m.blocks()) {
    Json jb;
    jb["name"] = b.name;
    jb["dim"] = b.dim();
    if (b.weight) {
      Json w = Json::array();
      for (std::size_t k = 0; k < m.group()->generators().size(); ++k)
        w.push_back(b.weight->on(m.group()->generator_element(int(k))));
      jb["weight_on_generators"] = std::move(w);
    }
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json json_generating_set(const GeneratingSet& g) {
  Json j;
  j["beta"] = g.beta;
  Json degrees = Json::array(), gens = Json::array();
  for (const auto& [f, d] : g.generators) {
    degrees.push_back(d);
    gens.push_back(render(f));
  }
  j["degrees"] = std::move(degrees);
  j["generators"] = std::move(gens);
  return j;
}

Json json_certificate(const SeparationCertificate& c) {
  Json j;
  j["kind"] = kind_name(c.kind);
  j["degree"] = c.degree;
  if (c.separator) j["separator"] = json_row(*c.separator);
  if (c.hint) j["hint"] = json_row(*c.hint);
  Json agreements = Json::array();
  for (const auto& row : c.agreements) agreements.push_back(json_row(row));
  j["agreements"] = std::move(agreements);
  if (!c.transcripts.empty()) {
    Json ts = Json::array();
    for (const auto& t : c.transcripts) {
      Json jt;
      jt["query"] = t.query;
      jt["member"] = t.member;
      jt["ideal"] = t.ideal;
      ts.push_back(std::move(jt));
    }
    j["radical_transcripts"] = std::move(ts);
  }
  return j;
}

Json json_radical_betasep(const RadicalBetaSep& r) {
  Json j;
  j["beta_sep"] = r.degree;
  j["candidate_degrees"] = r.candidates;
  j["generating_set"] = json_generating_set(r.generators);
  j["certificate"] = json_certificate(r.certificate);
  return j;
}

Json json_betasep_report(const BetaSepReport& r) {
  Json j;
  j["group_order"] = r.group_order;
  j["mu"] = r.mu;
  j["subset_size"] = r.subset_size;
  j["beta_sep"] = r.radical_value;
  if (r.witness_lower_bound)
    j["witness_lower_bound"] = *r.witness_lower_bound;
  else
    j["witness_lower_bound"] = nullptr;
  j["bounds_agree"] = r.bounds_agree;
  Json subsets = Json::array();
  for (const auto& s : r.subsets) {
    Json js;
    js["members"] = s.members;
    js["value"] = s.value;
    subsets.push_back(std::move(js));
  }
  j["subsets"] = std::move(subsets);
  if (r.best) j["best_subset_evidence"] = json_radical_betasep(*r.best);
  j["reduction_trail"] = r.reduction_trail;
  j["field_note"] = r.field_note;
  return j;
}

std::string render_report(const Json& doc, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << doc.dump(2) << '\n';
  } else if (format == "tsv") {
    flatten_tsv(doc, "", os);
  } else if (format == "human") {
    outline(doc, 0, os);
  } else {
    throw BadParameter("unknown output format '" + format + "'");
  }
  return os.str();
}

}  // namespace nsep
