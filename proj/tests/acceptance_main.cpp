// Acceptance driver: runs the numbered criteria from klv::accept and prints
// one PASS/FAIL line each.  With arguments, runs only the listed criteria.
// Exit code 0 iff every executed criterion passed.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "klv/accept.hpp"
#include "klv/error.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long id = std::strtol(argv[i], &end, 10);
    if (end == argv[i] || *end != '\0' || id < 1 || id > 9) {
      std::fprintf(stderr, "usage: %s [criterion-number 1..9]...\n", argv[0]);
      return 2;
    }
    ids.push_back(static_cast<int>(id));
  }
  if (ids.empty()) {
    for (int id = 1; id <= 9; ++id) ids.push_back(id);
  }

  bool all_pass = true;
  for (int id : ids) {
    klv::accept::CriterionResult res;
    try {
      res = klv::accept::run_criterion(id);
    } catch (const klv::Error& e) {
      res.id = id;
      res.name = "criterion-" + std::to_string(id);
      res.pass = false;
      res.detail = std::string("unexpected error: ") + e.what();
    }
    all_pass = all_pass && res.pass;
    std::printf("%s criterion-%d %s (%.1fs): %s\n", res.pass ? "PASS" : "FAIL", res.id,
                res.name.c_str(), res.seconds, res.detail.c_str());
    for (const klv::accept::CheckResult& c : res.checks) {
      std::printf("  %s %s: %s\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                  c.detail.c_str());
    }
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
