#include "seqsym/render.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace seqsym {

namespace {

using nlohmann::json;

std::string sign_token(Sign s) {
    switch (s) {
        case 1: return "+1";
        case -1: return "-1";
        case 0: return " 0";
        default: throw std::invalid_argument("sign entry outside {-1, 0, +1}");
    }
}

std::string render_text(const ResidueMatrix& a) {
    const int n = a.side();
    std::size_t width = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            width = std::max(width, std::to_string(a.at(i, j)).size());
        }
    }
    std::string out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            std::string cell = std::to_string(a.at(i, j));
            if (j > 1) out += ' ';
            out += std::string(width - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

std::string render_text(const SignMatrix& a) {
    const int n = a.side();
    std::string out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out += ' ';
            out += sign_token(a.at(i, j));
        }
        out += '\n';
    }
    return out;
}

template <typename M>
std::string render_csv(const M& a) {
    const int n = a.side();
    std::string out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out += ',';
            out += std::to_string(a.at(i, j));
        }
        out += '\n';
    }
    return out;
}

template <typename M>
json rows_json(const M& a) {
    json rows = json::array();
    for (int i = 1; i <= a.side(); ++i) {
        json row = json::array();
        for (int j = 1; j <= a.side(); ++j) {
            row.push_back(a.at(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_json(const ResidueMatrix& a) {
    json j;
    j["n"] = a.side();
    j["m"] = a.modulus().value();
    j["kind"] = "residue";
    j["rows"] = rows_json(a);
    return j.dump() + "\n";
}

std::string render_json(const SignMatrix& a) {
    const std::int64_t n = a.side();
    json j;
    j["n"] = a.side();
    j["m"] = n * n + 1;
    j["kind"] = "sign";
    j["rows"] = rows_json(a);
    return j.dump() + "\n";
}

constexpr std::int64_t kSignMaxval = 255;  // never equals n^2 for integer n

std::string pgm_header(int n, std::int64_t maxval) {
    return "P2\n" + std::to_string(n) + " " + std::to_string(n) + "\n" + std::to_string(maxval) +
           "\n";
}

std::string render_pgm(const ResidueMatrix& a) {
    const int n = a.side();
    const std::int64_t maxval = static_cast<std::int64_t>(n) * n;
    if (maxval > 65535) {
        throw std::invalid_argument(
            "pgm: residue matrices need maxval n^2 <= 65535, i.e. n <= 255; got n = " +
            std::to_string(n));
    }
    std::string out = pgm_header(n, maxval);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out += ' ';
            out += std::to_string(a.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string render_pgm(const SignMatrix& a) {
    const int n = a.side();
    std::string out = pgm_header(n, kSignMaxval);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out += ' ';
            switch (a.at(i, j)) {
                case 1: out += "255"; break;
                case -1: out += "0"; break;
                case 0: out += "128"; break;
                default: throw std::invalid_argument("sign entry outside {-1, 0, +1}");
            }
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::int64_t>> tokenize_rows(std::string_view input, char field_sep) {
    std::vector<std::vector<std::int64_t>> rows;
    std::istringstream lines{std::string(input)};
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::vector<std::int64_t> row;
        std::istringstream fields(line);
        std::string tok;
        while (field_sep == ',' ? static_cast<bool>(std::getline(fields, tok, ','))
                                : static_cast<bool>(fields >> tok)) {
            std::size_t used = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse: bad integer field '" + tok + "'");
            }
            if (used != tok.size()) {
                throw std::invalid_argument("parse: bad integer field '" + tok + "'");
            }
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::invalid_argument("parse: no rows found");
    }
    const std::size_t n = rows.size();
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw std::invalid_argument("parse: matrix is not square");
        }
    }
    return rows;
}

ResidueMatrix residue_from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const int n = static_cast<int>(rows.size());
    SquareGrid<std::int64_t> grid(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            grid.at(i, j) = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        }
    }
    return ResidueMatrix::from_values(std::move(grid));  // range-checks entries
}

SignMatrix sign_from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const int n = static_cast<int>(rows.size());
    SignMatrix out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const std::int64_t v = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (v < -1 || v > 1) {
                throw std::invalid_argument("parse: sign entry " + std::to_string(v) +
                                            " outside {-1, 0, +1}");
            }
            out.at(i, j) = static_cast<Sign>(v);
        }
    }
    return out;
}

json parse_json_object(std::string_view input, const char* expected_kind) {
    json j;
    try {
        j = json::parse(input);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("parse: invalid json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("kind") ||
        !j.contains("rows")) {
        throw std::invalid_argument("parse: json must carry n, m, kind and rows");
    }
    if (j["kind"] != expected_kind) {
        throw std::invalid_argument("parse: json kind '" + j["kind"].get<std::string>() +
                                    "', expected '" + expected_kind + "'");
    }
    return j;
}

std::vector<std::vector<std::int64_t>> json_rows(const json& j) {
    const auto n = j.at("n").get<std::int64_t>();
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : j.at("rows")) {
        rows.push_back(row.get<std::vector<std::int64_t>>());
    }
    if (static_cast<std::int64_t>(rows.size()) != n) {
        throw std::invalid_argument("parse: json rows do not match n");
    }
    for (const auto& row : rows) {
        if (static_cast<std::int64_t>(row.size()) != n) {
            throw std::invalid_argument("parse: json rows do not match n");
        }
    }
    return rows;
}

struct PgmPayload {
    int n;
    std::int64_t maxval;
    std::vector<std::vector<std::int64_t>> rows;
};

PgmPayload parse_pgm_payload(std::string_view input) {
    std::istringstream in{std::string(input)};
    std::string magic;
    in >> magic;
    if (magic != "P2") {
        throw std::invalid_argument("parse: pgm must start with P2");
    }
    std::int64_t w = 0, h = 0, maxval = 0;
    if (!(in >> w >> h >> maxval) || w < 1 || h < 1 || maxval < 1) {
        throw std::invalid_argument("parse: bad pgm header");
    }
    if (w != h) {
        throw std::invalid_argument("parse: pgm matrix is not square");
    }
    PgmPayload p{static_cast<int>(w), maxval, {}};
    p.rows.assign(static_cast<std::size_t>(h), std::vector<std::int64_t>());
    for (std::int64_t i = 0; i < h; ++i) {
        for (std::int64_t j = 0; j < w; ++j) {
            std::int64_t v = 0;
            if (!(in >> v)) {
                throw std::invalid_argument("parse: pgm is missing samples");
            }
            if (v < 0 || v > maxval) {
                throw std::invalid_argument("parse: pgm sample out of range");
            }
            p.rows[static_cast<std::size_t>(i)].push_back(v);
        }
    }
    return p;
}

}  // namespace

std::string_view to_string(RenderFormat f) {
    switch (f) {
        case RenderFormat::text: return "text";
        case RenderFormat::csv: return "csv";
        case RenderFormat::json: return "json";
        case RenderFormat::pgm: return "pgm";
    }
    return "?";
}

std::optional<RenderFormat> format_from_string(std::string_view name) {
    if (name == "text") return RenderFormat::text;
    if (name == "csv") return RenderFormat::csv;
    if (name == "json") return RenderFormat::json;
    if (name == "pgm") return RenderFormat::pgm;
    return std::nullopt;
}

std::string render(const ResidueMatrix& a, RenderFormat f) {
    switch (f) {
        case RenderFormat::text: return render_text(a);
        case RenderFormat::csv: return render_csv(a);
        case RenderFormat::json: return render_json(a);
        case RenderFormat::pgm: return render_pgm(a);
    }
    throw std::invalid_argument("unknown render format");
}

std::string render(const SignMatrix& a, RenderFormat f) {
    switch (f) {
        case RenderFormat::text: return render_text(a);
        case RenderFormat::csv: return render_csv(a);
        case RenderFormat::json: return render_json(a);
        case RenderFormat::pgm: return render_pgm(a);
    }
    throw std::invalid_argument("unknown render format");
}

ResidueMatrix parse_residue(std::string_view input, RenderFormat f) {
    switch (f) {
        case RenderFormat::text: return residue_from_rows(tokenize_rows(input, ' '));
        case RenderFormat::csv: return residue_from_rows(tokenize_rows(input, ','));
        case RenderFormat::json: {
            const json j = parse_json_object(input, "residue");
            ResidueMatrix out = residue_from_rows(json_rows(j));
            if (j.at("m").get<std::int64_t>() != out.modulus().value()) {
                throw std::invalid_argument("parse: json m does not equal n^2+1");
            }
            return out;
        }
        case RenderFormat::pgm: {
            const PgmPayload p = parse_pgm_payload(input);
            if (p.maxval != static_cast<std::int64_t>(p.n) * p.n) {
                throw std::invalid_argument("parse: residue pgm must have maxval n^2, got " +
                                            std::to_string(p.maxval));
            }
            return residue_from_rows(p.rows);
        }
    }
    throw std::invalid_argument("unknown render format");
}

SignMatrix parse_sign(std::string_view input, RenderFormat f) {
    switch (f) {
        case RenderFormat::text: return sign_from_rows(tokenize_rows(input, ' '));
        case RenderFormat::csv: return sign_from_rows(tokenize_rows(input, ','));
        case RenderFormat::json: {
            const json j = parse_json_object(input, "sign");
            SignMatrix out = sign_from_rows(json_rows(j));
            const std::int64_t n = out.side();
            if (j.at("m").get<std::int64_t>() != n * n + 1) {
                throw std::invalid_argument("parse: json m does not equal n^2+1");
            }
            return out;
        }
        case RenderFormat::pgm: {
            const PgmPayload p = parse_pgm_payload(input);
            if (p.maxval != kSignMaxval) {
                throw std::invalid_argument("parse: sign pgm must have maxval 255, got " +
                                            std::to_string(p.maxval));
            }
            SignMatrix out(p.n);
            for (int i = 1; i <= p.n; ++i) {
                for (int j = 1; j <= p.n; ++j) {
                    const std::int64_t v =
                        p.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                    if (v == 255) {
                        out.at(i, j) = 1;
                    } else if (v == 128) {
                        out.at(i, j) = 0;
                    } else if (v == 0) {
                        out.at(i, j) = -1;
                    } else {
                        throw std::invalid_argument("parse: sign pgm sample must be 0, 128 or 255");
                    }
                }
            }
            return out;
        }
    }
    throw std::invalid_argument("unknown render format");
}

}  // namespace seqsym
