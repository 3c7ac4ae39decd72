#include "cmhopf/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace cmhopf {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

void Report::add(std::string suite, std::string id, Status st, std::string witness,
                 std::string tag) {
  checks.push_back({std::move(suite), std::move(id), st, std::move(witness), std::move(tag)});
}

void Report::merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
    return std::tie(a.suite, a.id) < std::tie(b.suite, b.id);
  });
}

int Report::count(Status s) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* Report::first_failure() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return &c;
  return nullptr;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << status_name(c.status) << "  " << c.suite << "/" << c.id;
    if (!c.tag.empty()) os << "  [" << c.tag << "]";
    if (!c.witness.empty()) os << "\n      " << c.witness;
    os << "\n";
  }
  os << "summary: " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
     << count(Status::Skip) << " skip\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["suite"] = c.suite;
    r["check-id"] = c.id;
    r["status"] = status_name(c.status);
    r["witness"] = c.witness;
    r["citation-tag"] = c.tag;
    arr.push_back(r);
  }
  nlohmann::ordered_json doc;
  doc["records"] = arr;
  doc["summary"] = {{"pass", count(Status::Pass)},
                    {"fail", count(Status::Fail)},
                    {"skip", count(Status::Skip)}};
  return doc.dump(2);
}

}  // namespace cmhopf
