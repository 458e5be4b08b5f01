#pragma once

#include <vector>

#include "legknot/error.hpp"
#include "legknot/records.hpp"

namespace test {

inline const std::vector<legknot::KnotRecord>& bundled() {
  static const auto recs = legknot::load_records(LEGKNOT_TEST_RECORDS);
  return recs;
}

inline const legknot::KnotRecord& knot(const char* name) { return legknot::find_record(bundled(), name); }

template <class F>
legknot::Errc code_of(F&& fn) {
  try {
    fn();
  } catch (const legknot::Error& e) {
    return e.code();
  }
  return legknot::Errc::UsageError;
}

}  // namespace test
