#pragma once

// Non-flatness certificates for the seven Petersen family members, compiled
// in from data/certificates/*.json.

#include <petersen/certificate.hpp>
#include <petersen/family.hpp>
#include <petersen/io.hpp>

#include <petersen/bundled_sources.hpp>

#include <map>
#include <string>

namespace petersen {

inline const std::map<FamilyName, Certificate>& bundled_certificates()
{
    static const std::map<FamilyName, Certificate> table = [] {
        std::map<FamilyName, Certificate> out;
        for (const auto& [file, text] : detail::bundled_certificate_sources) {
            const auto name = parse_family_name(file);
            if (!name) {
                throw FormatError("bundled certificate " + file + ": unknown graph name");
            }
            out.emplace(*name, certificate_from_json(json::parse(text), "bundled." + file));
        }
        return out;
    }();
    return table;
}

inline const Certificate& bundled_certificate(FamilyName name)
{
    return bundled_certificates().at(name);
}

} // namespace petersen
