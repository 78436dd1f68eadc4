#include "report_io.hpp"

#include <cstdio>
#include <sstream>

namespace charavg::cli {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

const char* const kColumnNames[12] = {"q",     "phi",      "m2_bf",   "m2_exact",
                                      "m2_t2", "m2_t2_bound", "m4_bf", "m4_exact",
                                      "t1_main", "k_q",    "e1",      "e2"};

namespace {

std::vector<std::string> row_values(const MomentReport& r) {
  return {std::to_string(r.q),
          std::to_string(r.phi_q),
          fmt(r.m2_bruteforce),
          fmt(r.m2_exact),
          fmt(r.m2_theorem2),
          fmt(r.m2_theorem2_bound),
          fmt(r.m4_bruteforce),
          fmt(r.m4_exact),
          fmt(r.t1_main_term),
          fmt(r.k_q),
          fmt(r.e1),
          fmt(r.e2)};
}

}  // namespace

std::string csv_header() {
  std::string out;
  for (int i = 0; i < 12; ++i) {
    if (i) out += ',';
    out += kColumnNames[i];
  }
  return out;
}

std::string csv_row(const MomentReport& r) {
  const auto vals = row_values(r);
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ',';
    out += vals[i];
  }
  return out;
}

std::string json_object(const MomentReport& r) {
  const auto vals = row_values(r);
  std::string out = "{";
  for (int i = 0; i < 12; ++i) {
    if (i) out += ", ";
    out += '"';
    out += kColumnNames[i];
    out += "\": ";
    out += vals[i];
  }
  out += "}";
  return out;
}

std::string text_report(const MomentReport& r) {
  std::ostringstream os;
  os << "q = " << r.q << "  phi(q) = " << r.phi_q << "\n"
     << "  m2_bf    = " << fmt(r.m2_bruteforce) << "\n"
     << "  m2_exact = " << fmt(r.m2_exact) << "\n"
     << "  m2_t2    = " << fmt(r.m2_theorem2) << "  (truncation bound "
     << fmt(r.m2_theorem2_bound) << ")\n"
     << "  m4_bf    = " << fmt(r.m4_bruteforce) << "\n"
     << "  m4_exact = " << fmt(r.m4_exact) << "\n"
     << "  t1_main  = " << fmt(r.t1_main_term) << "\n"
     << "  k_q      = " << fmt(r.k_q) << "\n"
     << "  e1       = " << fmt(r.e1) << "\n"
     << "  e2       = " << fmt(r.e2) << "\n"
     << "  timings ms: bruteforce " << fmt(r.ms_bruteforce) << ", identities "
     << fmt(r.ms_identities) << ", theorem2 " << fmt(r.ms_theorem2) << "\n";
  return os.str();
}

}  // namespace charavg::cli
