#pragma once

#include <string>
#include <vector>

namespace cmhopf {

enum class Status { Pass, Fail, Skip };

const char* status_name(Status s);

struct Check {
  std::string suite;
  std::string id;
  Status status = Status::Pass;
  std::string witness;
  std::string tag;
};

class Report {
 public:
  std::vector<Check> checks;

  void add(std::string suite, std::string id, Status st, std::string witness = {},
           std::string tag = {});
  void pass(const std::string& suite, const std::string& id, const std::string& witness = {},
            const std::string& tag = {}) {
    add(suite, id, Status::Pass, witness, tag);
  }
  void fail(const std::string& suite, const std::string& id, const std::string& witness,
            const std::string& tag = {}) {
    add(suite, id, Status::Fail, witness, tag);
  }
  void merge(const Report& o);
  // Stable ordering by (suite, check id) for deterministic output.
  void sort();

  int count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  const Check* first_failure() const;

  std::string text() const;
  std::string json() const;
};

}  // namespace cmhopf
