#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "paracert/contact.hpp"
#include "paracert/diagram.hpp"

namespace paracert::cli {

/// Machine-readable command output plus the exit code the verdict
/// implies (0 success, 1 negative verdict or failed internal check).
/// Serialization is deterministic: keys sort alphabetically and numbers
/// are all integers except contact residuals.
struct Report {
    nlohmann::json doc;
    int exit_code = 0;

    std::string to_string() const { return doc.dump(2) + "\n"; }
};

Report report_certify(const DiagramFile& d);
Report report_sl(const DiagramFile& d);
Report report_check_even(const DiagramFile& d);
Report report_contact_verify(std::size_t samples, std::uint64_t seed);

}  // namespace paracert::cli
