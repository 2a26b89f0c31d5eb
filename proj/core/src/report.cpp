#include "regsg/report.hpp"

#include <algorithm>

namespace regsg {

  std::string_view to_string(Status status) noexcept {
    switch (status) {
      case Status::Pass:
        return "pass";
      case Status::Fail:
        return "fail";
      case Status::Skip:
        return "skip";
    }
    return "unknown";
  }

  void Report::add(CheckRecord record) {
    records_.push_back(std::move(record));
  }

  void Report::merge(Report const& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  }

  bool Report::ok() const noexcept {
    return failures() == 0;
  }

  std::size_t Report::failures() const noexcept {
    return std::count_if(records_.begin(), records_.end(), [](auto const& r) {
      return r.status == Status::Fail;
    });
  }

  CheckRecord const* Report::find(std::string_view check) const noexcept {
    for (auto const& r : records_) {
      if (r.check == check) {
        return &r;
      }
    }
    return nullptr;
  }

  bool Report::passed(std::string_view check) const noexcept {
    auto const* r = find(check);
    return r != nullptr && r->status == Status::Pass;
  }

  CheckRecord Check::record() const {
    CheckRecord r;
    r.suite      = suite_;
    r.check      = id_;
    r.checked    = checked_;
    r.violations = violations_;
    r.witness    = witness_;
    if (skipped_) {
      r.status = Status::Skip;
    } else {
      r.status = violations_ == 0 ? Status::Pass : Status::Fail;
    }
    return r;
  }

}  // namespace regsg
