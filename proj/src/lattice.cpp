#include "lattice.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <json.hpp>

#include "errors.hpp"

namespace artinx {

SubgroupLattice::SubgroupLattice(std::size_t group_order, std::vector<SubgroupClass> classes)
    : group_order_(group_order), classes_(std::move(classes)) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (const auto& s : classes_[c].conjugates) {
      class_of_.emplace(s.members, c);
      ++subgroup_count_;
    }
  }
}

std::optional<std::size_t> SubgroupLattice::class_of(const ElementSet& members) const {
  const auto it = class_of_.find(members);
  if (it == class_of_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::class_index(const ElementSet& members) const {
  const auto it = class_of_.find(members);
  if (it == class_of_.end()) throw PreconditionError("set is not a subgroup of this lattice");
  return it->second;
}

std::string SubgroupLattice::class_label(std::size_t c) const {
  const auto& cls = classes_[c];
  std::string out = (cls.is_cyclic() ? "C" : "N") + std::to_string(cls.order());
  if (cls.size() > 1) out += "*" + std::to_string(cls.size());
  return out;
}

SubgroupClass conjugacy_class_of(const GroupTable& g, const Subgroup& s) {
  std::vector<Subgroup> conj;
  std::unordered_map<ElementSet, bool, ElementSetHash> seen;
  for (Element x = 0; x < g.order(); ++x) {
    ElementSet c = conjugate_set(g, x, s.members);
    if (seen.emplace(c, true).second) {
      std::vector<Element> gens;
      gens.reserve(s.generators.size());
      for (Element e : s.generators) gens.push_back(g.conj(x, e));
      Subgroup sub;
      sub.members = c;
      sub.order = s.order;
      sub.is_cyclic = s.is_cyclic;
      sub.generators = std::move(gens);
      conj.push_back(std::move(sub));
    }
  }
  std::sort(conj.begin(), conj.end(),
            [](const Subgroup& a, const Subgroup& b) { return lex_less(a.members, b.members); });
  SubgroupClass cls;
  cls.representative = conj.front();
  cls.normalizer_index = conj.size();
  cls.conjugates = std::move(conj);
  return cls;
}

SubgroupLattice enumerate_subgroups(const GroupTable& g, const LatticeOptions& options) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> found;
  std::vector<SubgroupClass> classes;
  std::size_t total = 0;

  auto register_subgroup = [&](const Subgroup& s) {
    if (found.count(s.members)) return;
    SubgroupClass cls = conjugacy_class_of(g, s);
    total += cls.size();
    if (total > options.max_subgroups)
      throw LimitError("subgroup count exceeds limit of " + std::to_string(options.max_subgroups));
    for (const auto& c : cls.conjugates) found.emplace(c.members, classes.size());
    classes.push_back(std::move(cls));
  };

  // every subgroup is a join of cyclic subgroups of prime-power order
  std::vector<Subgroup> atoms;
  {
    std::unordered_map<ElementSet, bool, ElementSetHash> seen;
    for (Element x = 1; x < g.order(); ++x) {
      std::size_t k = g.element_order(x);
      std::size_t p = 2;
      while (k % p) ++p;
      while (k % p == 0) k /= p;
      if (k != 1) continue;
      Subgroup a = generated_subgroup(g, {x});
      if (seen.emplace(a.members, true).second) {
        a.generators = {x};
        atoms.push_back(std::move(a));
      }
    }
  }

  register_subgroup(trivial_subgroup());
  for (const auto& a : atoms) register_subgroup(a);

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Subgroup base = classes[i].representative;
    for (const auto& a : atoms) {
      if (a.is_subgroup_of(base)) continue;
      const Subgroup joined = join_element(g, base, a.generators.front());
      if (!found.count(joined.members)) register_subgroup(joined);
    }
  }

  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return lex_less(a.representative.members, b.representative.members);
  });
  return SubgroupLattice(g.order(), std::move(classes));
}

// ---------------------------------------------------------------------------
// cache

namespace {
constexpr int kCacheVersion = 1;
}

std::string lattice_to_json(const std::string& spec, const GroupTable& g, const SubgroupLattice& lat) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["version"] = kCacheVersion;
  j["spec"] = spec;
  j["order"] = g.order();
  auto& arr = j["classes"] = nlohmann::ordered_json::array();
  for (const auto& cls : lat.classes()) {
    nlohmann::ordered_json c;
    c["rep_bits_hex"] = cls.representative.members.to_hex(g.order());
    c["order"] = cls.order();
    c["normalizer_index"] = cls.normalizer_index;
    c["conjugate_count"] = cls.size();
    arr.push_back(std::move(c));
  }
  return j.dump(1);
}

SubgroupLattice lattice_from_json(const std::string& spec, const GroupTable& g, const std::string& json) {
  const auto j = nlohmann::json::parse(json);
  if (j.at("version").get<int>() != kCacheVersion) throw std::runtime_error("lattice cache version mismatch");
  if (j.at("spec").get<std::string>() != spec) throw std::runtime_error("lattice cache spec mismatch");
  if (j.at("order").get<std::size_t>() != g.order()) throw std::runtime_error("lattice cache order mismatch");
  std::vector<SubgroupClass> classes;
  for (const auto& c : j.at("classes")) {
    const ElementSet bits = ElementSet::from_hex(c.at("rep_bits_hex").get<std::string>());
    const Subgroup s = checked_subgroup(g, bits);
    SubgroupClass cls = conjugacy_class_of(g, s);
    if (cls.order() != c.at("order").get<std::size_t>() ||
        cls.normalizer_index != c.at("normalizer_index").get<std::size_t>() ||
        cls.size() != c.at("conjugate_count").get<std::size_t>() ||
        !(cls.representative.members == bits))
      throw std::runtime_error("lattice cache entry does not match the group");
    classes.push_back(std::move(cls));
  }
  if (classes.empty() || classes.front().order() != 1 || classes.back().order() != g.order())
    throw std::runtime_error("lattice cache is incomplete");
  return SubgroupLattice(g.order(), std::move(classes));
}

std::string cache_file_name(const std::string& spec) {
  std::string name;
  for (char c : spec) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  std::ostringstream os;
  os << name << '-' << std::hex << std::hash<std::string>{}(spec) << ".lattice.json";
  return os.str();
}

SubgroupLattice cached_lattice(const std::string& spec, const GroupTable& g,
                               const std::string& cache_dir, const LatticeOptions& options) {
  if (cache_dir.empty()) return enumerate_subgroups(g, options);
  namespace fs = std::filesystem;
  const fs::path path = fs::path(cache_dir) / cache_file_name(spec);
  if (fs::exists(path)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return lattice_from_json(spec, g, buf.str());
    } catch (const std::exception&) {
      // stale or foreign entry: rebuild below
    }
  }
  SubgroupLattice lat = enumerate_subgroups(g, options);
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  std::ostringstream tmp_name;
  tmp_name << path.string() << ".tmp." << ::getpid() << '.' << std::this_thread::get_id();
  const fs::path tmp = tmp_name.str();
  {
    std::ofstream out(tmp);
    out << lattice_to_json(spec, g, lat) << '\n';
    if (!out) ec = std::make_error_code(std::errc::io_error);
  }
  if (!ec) fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
  return lat;
}

}  // namespace artinx
