#ifndef GPCERT_CERTIFICATE_IO_HH
#define GPCERT_CERTIFICATE_IO_HH 1

#include <gpcert/certificate.hh>

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace gpcert
{
    inline constexpr int certificate_format_version = 1;

    /// Malformed or schema-violating document.
    class FormatError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    [[nodiscard]] auto to_json(const Certificate & cert) -> nlohmann::json;
    [[nodiscard]] auto certificate_from_json(const nlohmann::json & doc) -> Certificate;

    [[nodiscard]] auto to_json(const Graph & g) -> nlohmann::json;
    [[nodiscard]] auto graph_from_json(const nlohmann::json & doc) -> Graph;

    /// Canonical text: two-space indent, sorted keys, trailing newline.
    [[nodiscard]] auto dump(const nlohmann::json & doc) -> std::string;

    auto write_file(const std::filesystem::path & path, const nlohmann::json & doc) -> void;

    /// Throws FormatError if the file cannot be read or parsed.
    [[nodiscard]] auto read_file(const std::filesystem::path & path) -> nlohmann::json;
}

#endif
