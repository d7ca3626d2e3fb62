#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace siegel {

// Structured failure with a stable machine-readable code. The CLI prints
// these as a single JSON object on stderr and exits with status 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message,
          nlohmann::ordered_json details = nlohmann::ordered_json::object())
        : std::runtime_error(message),
          code_(std::move(code)),
          details_(std::move(details)) {}

    const std::string& code() const noexcept { return code_; }
    const nlohmann::ordered_json& details() const noexcept { return details_; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["code"] = code_;
        j["message"] = what();
        if (!details_.empty())
            j["details"] = details_;
        return j;
    }

private:
    std::string code_;
    nlohmann::ordered_json details_;
};

} // namespace siegel
