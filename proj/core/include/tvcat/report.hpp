#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tvcat/error.hpp"

namespace tvcat {

enum class Status { pass, fail, vacuous };

std::string_view to_string(Status status) noexcept;

/// One checked law. A failing entry always carries a concrete witness.
struct AuditEntry {
  std::string law;
  Status status = Status::pass;
  std::string witness;
  std::string note;
};

/// Ordered list of law verdicts produced by the audit functions.
struct AuditReport {
  std::string subject;
  bool sampled = false;
  std::vector<AuditEntry> entries;

  bool passed() const noexcept;
  const AuditEntry* find(std::string_view law) const noexcept;
  Status status_of(std::string_view law) const;

  void pass(std::string law, std::string note = {});
  void fail(std::string law, std::string witness, std::string note = {});
  void vacuous(std::string law, std::string note);
  /// Records pass when witness is empty, fail otherwise.
  void record(std::string law, const std::string& witness, std::string note = {});
};

/// A violated inequality, as returned by the check_* validators.
struct Violation {
  std::string law;
  std::string witness;

  std::string describe() const { return law + ": " + witness; }
};

/// Result of a validator: the validated object or the first violation found.
template <class T>
class Checked {
 public:
  Checked(T value) : v_(std::move(value)) {}
  Checked(Violation violation) : v_(std::move(violation)) {}

  bool ok() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  /// Throws validation when the check failed.
  const T& value() const {
    if (!ok()) tvcat::fail(ErrorKind::validation, std::get<1>(v_).describe());
    return std::get<0>(v_);
  }
  const Violation& violation() const { return std::get<1>(v_); }

 private:
  std::variant<T, Violation> v_;
};

}  // namespace tvcat
