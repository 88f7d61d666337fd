#include "report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace artinx {

using ojson = nlohmann::ordered_json;

std::string to_string(Method m) {
  switch (m) {
    case Method::Both: return "both";
    case Method::Congruence: return "congruence";
    case Method::Marks: return "marks";
  }
  return "both";
}

ExponentReport compute_report(const std::string& spec, const GroupTable& g, const SubgroupLattice& lat,
                              const MarkTable* table, const Family& family, Method method) {
  ExponentReport r;
  r.group = spec;
  r.order = g.order();
  r.class_count = lat.size();
  r.subgroup_count = lat.subgroup_count();
  r.family = family;
  r.method = method;
  family_mask(lat, family);  // validates indices up front

  if (method != Method::Marks) {
    r.pairs = congruence_pairs(g, lat, family);
    r.exponent_congruence = exponent_from_pairs(r.pairs);
  }
  if (method != Method::Congruence) {
    if (table) {
      r.exponent_marks = artin_exponent_marks(g, lat, *table, family);
    } else {
      const MarkTable built = build_mark_table(g, lat);
      r.exponent_marks = artin_exponent_marks(g, lat, built, family);
    }
  }
  if (family.kind == Family::Kind::AllCyclic) r.prediction = closed_form_predictor(g, lat);
  else r.prediction.branch = "explicit family";

  const std::uint64_t a = r.exponent();
  for (std::uint64_t p : prime_divisors(g.order())) r.per_prime.emplace_back(p, p_part(a, p));
  if (r.exponent_congruence) r.binding = binding_pairs(r.pairs, *r.exponent_congruence);
  r.sylow = sylow_reduction_report(g, lat, family);
  return r;
}

namespace {

ojson opt_json(const std::optional<std::uint64_t>& v) { return v ? ojson(*v) : ojson(nullptr); }
ojson opt_json(const std::optional<bool>& v) { return v ? ojson(*v) : ojson(nullptr); }

ojson pair_json(const CongruencePair& p, const SubgroupLattice& lat, bool binding) {
  ojson j;
  j["u_class"] = p.u_class;
  j["u_label"] = lat.class_label(p.u_class);
  j["v_class"] = p.v_class;
  j["v_label"] = lat.class_label(p.v_class);
  j["u_bits"] = p.u.members.to_hex(lat.group_order());
  j["prime"] = p.prime;
  j["index"] = p.index;
  j["count"] = p.count;
  j["constraint"] = p.constraint;
  j["binding"] = binding;
  return j;
}

std::string family_text(const Family& f) {
  if (f.kind == Family::Kind::AllCyclic) return "cyclic";
  std::string out = "classes ";
  for (std::size_t i = 0; i < f.classes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.classes[i]);
  }
  return out;
}

std::string pair_text(const CongruencePair& p, const SubgroupLattice& lat) {
  std::ostringstream os;
  os << lat.class_label(p.u_class) << " [" << p.u.members.to_hex(lat.group_order()) << "] <| "
     << lat.class_label(p.v_class) << "  index " << p.index << "  count " << p.count << "  constraint "
     << p.constraint;
  return os.str();
}

}  // namespace

std::string report_to_json(const ExponentReport& r, const SubgroupLattice& lat, bool audit) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "exponent_report";
  j["group"] = r.group;
  j["order"] = r.order;
  j["class_count"] = r.class_count;
  j["subgroup_count"] = r.subgroup_count;
  if (r.family.kind == Family::Kind::AllCyclic) {
    j["family"] = "cyclic";
  } else {
    j["family"] = r.family.classes;
  }
  j["method"] = to_string(r.method);
  j["exponent"] = r.exponent();
  j["exponent_congruence"] = opt_json(r.exponent_congruence);
  j["exponent_marks"] = opt_json(r.exponent_marks);
  j["methods_agree"] = r.methods_agree();
  j["divides_order"] = r.divides_order();

  ojson pred;
  pred["value"] = opt_json(r.prediction.value);
  pred["branch"] = r.prediction.branch;
  pred["agrees"] = r.prediction.value ? ojson(*r.prediction.value == r.exponent()) : ojson(nullptr);
  if (r.prediction.two_group_formula) {
    pred["two_group_formula"] = opt_json(r.prediction.two_group_formula);
    pred["index_two_formula"] = opt_json(r.prediction.index_two_formula);
    pred["commutator_core_cyclic"] = opt_json(r.prediction.commutator_core_cyclic);
    pred["normalizing_set_cyclic"] = opt_json(r.prediction.normalizing_set_cyclic);
  }
  j["predictor"] = std::move(pred);

  auto& primes = j["per_prime"] = ojson::array();
  for (const auto& [p, part] : r.per_prime) primes.push_back({{"prime", p}, {"part", part}});

  auto& binding = j["binding_pairs"] = ojson::array();
  for (std::size_t i : r.binding) binding.push_back(pair_json(r.pairs[i], lat, true));

  auto& sylow = j["sylow"] = ojson::array();
  for (const auto& s : r.sylow) {
    sylow.push_back({{"prime", s.prime},
                     {"exponent_part", s.exponent_part},
                     {"sylow_order", s.sylow_order},
                     {"sylow_exponent", s.sylow_exponent},
                     {"match", s.match}});
  }

  if (audit) {
    auto& pairs = j["pairs"] = ojson::array();
    std::size_t next = 0;
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
      const bool is_binding = next < r.binding.size() && r.binding[next] == i;
      if (is_binding) ++next;
      pairs.push_back(pair_json(r.pairs[i], lat, is_binding));
    }
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const ExponentReport& r, const SubgroupLattice& lat, bool audit) {
  std::ostringstream os;
  os << "group      " << r.group << "  (order " << r.order << ", " << r.subgroup_count << " subgroups in "
     << r.class_count << " classes)\n";
  os << "family     " << family_text(r.family) << "\n";
  if (r.exponent_congruence) os << "congruence " << *r.exponent_congruence << "\n";
  if (r.exponent_marks) os << "marks      " << *r.exponent_marks << "\n";
  if (r.exponent_congruence && r.exponent_marks)
    os << "agreement  " << (r.methods_agree() ? "yes" : "NO - METHODS DISAGREE") << "\n";
  os << "exponent   " << r.exponent() << "\n";
  os << "predictor  " << (r.prediction.value ? std::to_string(*r.prediction.value) : std::string("unknown"))
     << " [" << r.prediction.branch << "]";
  if (r.prediction.two_group_formula)
    os << "  (2^(a-1)-style: " << *r.prediction.two_group_formula
       << ", index-two formula: " << *r.prediction.index_two_formula << ")";
  os << "\n";
  os << "per prime ";
  for (const auto& [p, part] : r.per_prime) os << " " << p << ":" << part;
  os << "\n";
  for (const auto& s : r.sylow) {
    os << "sylow p=" << s.prime << "  part " << s.exponent_part << "  A(P)=" << s.sylow_exponent << " (|P|="
       << s.sylow_order << ")  " << (s.match ? "match" : "mismatch (report-only)") << "\n";
  }
  if (!r.binding.empty()) {
    os << "binding pairs:\n";
    for (std::size_t i : r.binding) os << "  " << pair_text(r.pairs[i], lat) << "\n";
  }
  if (audit) {
    os << "congruence pairs (" << r.pairs.size() << "):\n";
    std::size_t next = 0;
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
      const bool is_binding = next < r.binding.size() && r.binding[next] == i;
      if (is_binding) ++next;
      os << (is_binding ? "* " : "  ") << pair_text(r.pairs[i], lat) << "\n";
    }
  }
  return os.str();
}

std::string marks_to_json(const std::string& spec, const SubgroupLattice& lat, const MarkTable& table) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "mark_table";
  j["group"] = spec;
  ojson orders = ojson::array(), labels = ojson::array(), rows = ojson::array();
  for (std::size_t c = 0; c < lat.size(); ++c) {
    orders.push_back(lat[c].order());
    labels.push_back(lat.class_label(c));
  }
  for (std::size_t v = 0; v < table.size(); ++v) {
    ojson row = ojson::array();
    for (std::size_t u = 0; u < table.size(); ++u) row.push_back(table.at(v, u));
    rows.push_back(std::move(row));
  }
  j["class_orders"] = std::move(orders);
  j["class_labels"] = std::move(labels);
  j["marks"] = std::move(rows);
  return j.dump() + "\n";
}

std::string marks_to_text(const std::string& spec, const SubgroupLattice& lat, const MarkTable& table) {
  std::size_t width = 4;
  for (std::size_t c = 0; c < lat.size(); ++c) width = std::max(width, lat.class_label(c).size() + 1);
  for (std::int64_t x : table.data()) width = std::max(width, std::to_string(x).size() + 1);
  std::ostringstream os;
  os << "table of marks: " << spec << " (" << lat.size() << " classes)\n";
  os << std::setw(static_cast<int>(width)) << "";
  for (std::size_t u = 0; u < lat.size(); ++u) os << std::setw(static_cast<int>(width)) << lat.class_label(u);
  os << "\n";
  for (std::size_t v = 0; v < table.size(); ++v) {
    os << std::setw(static_cast<int>(width)) << lat.class_label(v);
    for (std::size_t u = 0; u < table.size(); ++u) os << std::setw(static_cast<int>(width)) << table.at(v, u);
    os << "\n";
  }
  return os.str();
}

}  // namespace artinx
