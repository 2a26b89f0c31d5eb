#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regsg {

  enum class Status { Pass, Fail, Skip };

  std::string_view to_string(Status status) noexcept;

  struct CheckRecord {
    std::string suite;
    std::string check;
    Status      status = Status::Pass;
    std::string witness;
    std::size_t checked    = 0;
    std::size_t violations = 0;
  };

  class Report {
   public:
    void add(CheckRecord record);
    void merge(Report const& other);

    bool        ok() const noexcept;
    std::size_t failures() const noexcept;

    // First record with the given check id, or nullptr.
    CheckRecord const* find(std::string_view check) const noexcept;
    bool               passed(std::string_view check) const noexcept;

    std::vector<CheckRecord> const& records() const noexcept {
      return records_;
    }

   private:
    std::vector<CheckRecord> records_;
  };

  // Accumulates the outcome of one named check. Only the first violation's
  // witness is kept.
  class Check {
   public:
    Check(std::string suite, std::string id)
        : suite_(std::move(suite)), id_(std::move(id)) {}

    template <typename Witness>
    bool expect(bool condition, Witness&& witness) {
      ++checked_;
      if (!condition) {
        if (violations_ == 0) {
          witness_ = std::forward<Witness>(witness)();
        }
        ++violations_;
      }
      return condition;
    }

    void fail(std::string witness) {
      expect(false, [&] { return witness; });
    }

    void skip(std::string reason) {
      skipped_ = true;
      witness_ = std::move(reason);
    }

    bool ok() const noexcept {
      return violations_ == 0;
    }

    CheckRecord record() const;
    void        into(Report& report) const {
      report.add(record());
    }

   private:
    std::string suite_;
    std::string id_;
    std::string witness_;
    std::size_t checked_    = 0;
    std::size_t violations_ = 0;
    bool        skipped_    = false;
  };

}  // namespace regsg
