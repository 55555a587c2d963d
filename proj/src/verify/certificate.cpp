#include "matroot/verify/certificate.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>

namespace matroot::verify {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

bool Certificate::as_expected() const {
  if (expected_fail) return verdict == Verdict::fail;
  return verdict != Verdict::fail;
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j{{"check_id", cert.check_id},
                   {"params", cert.params},
                   {"verdict", to_string(cert.verdict)},
                   {"witness", cert.witness},
                   {"verified_range", cert.verified_range}};
  if (cert.expected_fail) j["expected_fail"] = true;
  if (!cert.details.is_null()) j["details"] = cert.details;
  return j;
}

nlohmann::json to_json(const std::vector<Certificate>& certs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : certs) arr.push_back(to_json(c));
  return arr;
}

void sort_certificates(std::vector<Certificate>& certs) {
  std::stable_sort(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    return a.params.dump() < b.params.dump();
  });
}

bool campaign_passed(const std::vector<Certificate>& certs) {
  return std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.as_expected(); });
}

void print_summary(std::ostream& out, const std::vector<Certificate>& certs) {
  struct Counts {
    int pass = 0, fail = 0, skipped = 0, unexpected = 0;
  };
  std::map<std::string, Counts> by_check;
  for (const auto& c : certs) {
    auto& counts = by_check[c.check_id];
    if (c.verdict == Verdict::pass) ++counts.pass;
    if (c.verdict == Verdict::fail) ++counts.fail;
    if (c.verdict == Verdict::skipped) ++counts.skipped;
    if (!c.as_expected()) ++counts.unexpected;
  }
  out << std::left << std::setw(32) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
      << std::setw(9) << "skipped" << "  status\n";
  for (const auto& [id, counts] : by_check) {
    out << std::left << std::setw(32) << id << std::right << std::setw(8) << counts.pass << std::setw(8) << counts.fail
        << std::setw(9) << counts.skipped << "  " << (counts.unexpected == 0 ? "ok" : "UNEXPECTED") << '\n';
  }
  out << "overall: " << (campaign_passed(certs) ? "PASS" : "FAIL") << " (" << certs.size() << " certificates)\n";
}

}  // namespace matroot::verify
