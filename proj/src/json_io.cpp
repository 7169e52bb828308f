#include "matchmonoid/json_io.hpp"

#include <fstream>

#include "matchmonoid/errors.hpp"

namespace matchmonoid {

ojson integer_json(const Integer& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v.get_si());
  return integer_str(v);
}

ojson poset_to_json(const Poset& p) {
  ojson j;
  j["n"] = p.n;
  ojson covers = ojson::array();
  for (auto [lo, hi] : p.covers) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  j["labels"] = p.labels;
  return j;
}

PosetPtr poset_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers") ||
      !j["n"].is_number_integer() || !j["covers"].is_array())
    fail(Errc::parse_error, "poset JSON needs integer 'n' and array 'covers'");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> covers;
  for (const auto& e : j["covers"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail(Errc::parse_error, "each cover must be an [int,int] pair");
    covers.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array())
      fail(Errc::parse_error, "'labels' must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) fail(Errc::parse_error, "'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return build_poset(n, std::move(covers), std::move(labels));
}

PosetPtr load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  ojson j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, path + ": " + e.what());
  }
  return poset_from_json(j);
}

ojson endo_to_json(const Endo& e, bool with_poset) {
  ojson j;
  if (with_poset) j["poset"] = poset_to_json(*e.poset);
  j["image"] = e.image;
  if (!e.word.empty()) j["word"] = e.word;
  return j;
}

namespace {

ojson matching_json_impl(const Poset& p, const std::vector<std::int32_t>& partner,
                         bool partial, bool special, bool lifting) {
  ojson j;
  j["partner"] = partner;
  j["partial"] = partial;
  ojson dirs = ojson::array();
  for (int x = 0; x < p.n; ++x) {
    if (partner[x] == x)
      dirs.push_back("fixed");
    else
      dirs.push_back(p.rank[partner[x]] > p.rank[x] ? "up" : "down");
  }
  j["directions"] = std::move(dirs);
  j["special"] = special;
  j["lifting"] = lifting;
  return j;
}

}  // namespace

ojson matching_to_json(const Matching& m) {
  return matching_json_impl(*m.poset, m.partner, false, is_special(m),
                            satisfies_lifting(m));
}

ojson matching_to_json(const PartialMatching& m) {
  return matching_json_impl(*m.poset, m.partner, true, is_special(m),
                            satisfies_lifting(m));
}

ojson closure_report_json(const MonoidClosure& closure) {
  ojson j;
  j["size"] = closure.elements.size();
  j["generators"] = closure.generators.size();
  j["idempotents"] = closure.idempotents.size();

  std::vector<Endo> idems = closure.idempotent_elements();
  IdempotentOrder order = idempotent_order_relation(idems);
  ojson hasse = ojson::array();
  for (auto [a, b] : order.hasse) hasse.push_back({a, b});
  j["idempotent_hasse"] = std::move(hasse);

  ojson summaries = ojson::array();
  for (const Endo& e : idems) {
    ojson s;
    s["image"] = image_set(e).to_vector();
    ojson fiber_sizes = ojson::array();
    for (int v : image_set(e).to_vector())
      fiber_sizes.push_back(fiber(e, v).size());
    s["fiber_sizes"] = std::move(fiber_sizes);
    summaries.push_back(std::move(s));
  }
  j["idempotent_summaries"] = std::move(summaries);
  return j;
}

ojson idempotent_report_json(const IdempotentReport& report) {
  ojson j;
  j["image"] = report.image;
  ojson fibers = ojson::array();
  for (const auto& [v, f] : report.fibers) fibers.push_back({{"point", v}, {"fiber", f}});
  j["fibers"] = std::move(fibers);

  ojson retract;
  retract["ok"] = report.retract.ok;
  if (report.retract.ok) {
    ojson tops = ojson::array();
    for (int v : report.image) tops.push_back({v, report.retract.retract_top[v]});
    retract["top"] = std::move(tops);
  } else if (report.retract.non_interval_fiber) {
    retract["non_interval_fiber"] = *report.retract.non_interval_fiber;
  }
  j["interval_retract"] = std::move(retract);

  ojson proj;
  proj["ok"] = report.projection.ok;
  if (report.projection.witness) {
    proj["witness"] = {report.projection.witness->first,
                       report.projection.witness->second};
    proj["witness_set"] = report.projection.witness_set;
  }
  j["projection"] = std::move(proj);

  if (report.special.has_value()) j["special"] = *report.special;

  ojson flags;
  flags["image_graded"] = flag_name(report.flags.image_graded);
  flags["complement_graded"] = flag_name(report.flags.complement_graded);
  flags["partition_ok"] = flag_name(report.flags.partition_ok);
  flags["atoms_ok"] = flag_name(report.flags.atoms_ok);
  flags["complement_lemma"] = flag_name(report.flags.complement_lemma);
  j["theorem_flags"] = std::move(flags);
  return j;
}

std::string dump_json(const ojson& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace matchmonoid
