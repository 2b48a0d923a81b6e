#include "tvcat/report.hpp"

#include <algorithm>

#include "tvcat/error.hpp"

namespace tvcat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::mismatch: return "mismatch";
    case ErrorKind::unknown_name: return "unknown-name";
    case ErrorKind::capability: return "capability";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::validation: return "validation";
    case ErrorKind::parse: return "parse";
  }
  return "error";
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

bool AuditReport::passed() const noexcept {
  return std::none_of(entries.begin(), entries.end(),
                      [](const AuditEntry& e) { return e.status == Status::fail; });
}

const AuditEntry* AuditReport::find(std::string_view law) const noexcept {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const AuditEntry& e) { return e.law == law; });
  return it == entries.end() ? nullptr : &*it;
}

Status AuditReport::status_of(std::string_view law) const {
  const AuditEntry* e = find(law);
  if (e == nullptr) tvcat::fail(ErrorKind::unknown_name, "report has no entry '" + std::string(law) + "'");
  return e->status;
}

void AuditReport::pass(std::string law, std::string note) {
  entries.push_back({std::move(law), Status::pass, {}, std::move(note)});
}

void AuditReport::fail(std::string law, std::string witness, std::string note) {
  entries.push_back({std::move(law), Status::fail, std::move(witness), std::move(note)});
}

void AuditReport::vacuous(std::string law, std::string note) {
  entries.push_back({std::move(law), Status::vacuous, {}, std::move(note)});
}

void AuditReport::record(std::string law, const std::string& witness, std::string note) {
  if (witness.empty())
    pass(std::move(law), std::move(note));
  else
    fail(std::move(law), witness, std::move(note));
}

}  // namespace tvcat
