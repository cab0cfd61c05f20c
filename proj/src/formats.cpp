// Copyright 2026 The sqkc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqkc/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sqkc/error.hpp"

namespace sqkc {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(s.substr(start, i - start));
        }
    }
    return out;
}

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t number = 0;
    for (auto line : split(text, '\n')) {
        ++number;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        out.emplace_back(number, line);
    }
    return out;
}

[[noreturn]] void format_error(std::size_t line, const std::string &what) {
    throw Error(ErrorKind::FormatError, "line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view token, std::size_t line) {
    double value = 0.0;
    const char *begin = token.data();
    const char *end = token.data() + token.size();
    if (!token.empty() && *begin == '+') {
        ++begin;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        format_error(line, "'" + std::string(token) + "' is not a number");
    }
    return value;
}

BitString parse_key(std::string_view token, std::size_t line) {
    try {
        return BitString::from_token(token);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::InvalidBitString) {
            format_error(line, "'" + std::string(token) + "' is not a bitstring");
        }
        throw;
    }
}

std::string number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

bool length_lex_less(const std::string &a, const std::string &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IOError, "cannot read '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_qstring(const QString &s) {
    std::string out;
    for (const auto &t : s.terms()) {
        out += t.key.token() + " " + number(t.amplitude.real()) + " " + number(t.amplitude.imag()) + "\n";
    }
    return out;
}

QString parse_qstring(std::string_view text) {
    std::vector<Term> terms;
    for (const auto &[line, content] : content_lines(text)) {
        const auto tok = tokens(content);
        if (tok.size() != 3) {
            format_error(line, "expected '<bitstring> <re> <im>'");
        }
        terms.push_back({parse_key(tok[0], line), Complex(parse_double(tok[1], line), parse_double(tok[2], line))});
    }
    return make_qstring(std::move(terms), false);
}

std::string format_inline_qstring(const QString &s) {
    std::string out = "{ ";
    bool first = true;
    for (const auto &t : s.terms()) {
        if (!first) {
            out += " ; ";
        }
        first = false;
        out += t.key.token() + ":" + number(t.amplitude.real()) + "," + number(t.amplitude.imag());
    }
    return out + " }";
}

namespace {

QString parse_inline_at(std::string_view text, std::size_t line) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        format_error(line, "inline state must be enclosed in braces");
    }
    std::vector<Term> terms;
    for (auto part : split(text.substr(1, text.size() - 2), ';')) {
        part = trim(part);
        if (part.empty()) {
            continue;
        }
        const auto colon = part.find(':');
        const auto comma = part.find(',', colon == std::string_view::npos ? 0 : colon);
        if (colon == std::string_view::npos || comma == std::string_view::npos) {
            format_error(line, "inline term must read '<bitstring>:<re>,<im>'");
        }
        terms.push_back({parse_key(trim(part.substr(0, colon)), line),
                         Complex(parse_double(trim(part.substr(colon + 1, comma - colon - 1)), line),
                                 parse_double(trim(part.substr(comma + 1)), line))});
    }
    return make_qstring(std::move(terms), false);
}

QString parse_state_ref(std::string_view ref, const std::filesystem::path &base_dir, std::size_t line) {
    ref = trim(ref);
    if (!ref.empty() && ref.front() == '{') {
        return parse_inline_at(ref, line);
    }
    if (ref.empty() || tokens(ref).size() != 1) {
        format_error(line, "expected an inline state or a single path");
    }
    std::filesystem::path p(ref);
    if (p.is_relative()) {
        p = base_dir / p;
    }
    return parse_qstring(read_text_file(p));
}

}  // namespace

QString parse_inline_qstring(std::string_view text) {
    return parse_inline_at(text, 1);
}

std::string format_ensemble(const Ensemble &e) {
    std::vector<std::pair<std::string, double>> rows;
    for (const auto &entry : e.entries()) {
        rows.emplace_back(format_inline_qstring(entry.state), entry.probability);
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto &a, const auto &b) { return length_lex_less(a.first, b.first); });
    std::string out;
    for (const auto &[state, p] : rows) {
        out += number(p) + " " + state + "\n";
    }
    return out;
}

Ensemble parse_ensemble(std::string_view text, const std::filesystem::path &base_dir) {
    std::vector<EnsembleEntry> entries;
    for (const auto &[line, content] : content_lines(text)) {
        const auto space = content.find_first_of(" \t");
        if (space == std::string_view::npos) {
            format_error(line, "expected '<p> <state>'");
        }
        const double p = parse_double(content.substr(0, space), line);
        entries.push_back({p, parse_state_ref(content.substr(space + 1), base_dir, line)});
    }
    return Ensemble(std::move(entries));
}

Ensemble load_ensemble(const std::filesystem::path &path) {
    return parse_ensemble(read_text_file(path), path.parent_path());
}

ProgramTable parse_program_table(std::string_view text, const std::filesystem::path &base_dir) {
    ProgramTable table;
    bool have_header = false;
    for (const auto &[line, content] : content_lines(text)) {
        if (!have_header) {
            const auto colon = content.find(':');
            if (colon == std::string_view::npos || trim(content.substr(0, colon)) != "prefix") {
                format_error(line, "machine files start with 'prefix: true|false'");
            }
            const auto flag = trim(content.substr(colon + 1));
            if (flag != "true" && flag != "false") {
                format_error(line, "prefix flag must be true or false");
            }
            table.prefix_free = flag == "true";
            have_header = true;
            continue;
        }
        const auto arrow = content.find("->");
        if (arrow == std::string_view::npos) {
            format_error(line, "expected '<program> -> <state>'");
        }
        table.programs.push_back(
            {parse_key(trim(content.substr(0, arrow)), line), parse_state_ref(content.substr(arrow + 2), base_dir, line)});
    }
    if (!have_header) {
        format_error(1, "missing 'prefix:' header");
    }
    return table;
}

ProgramTable load_program_table(const std::filesystem::path &path) {
    return parse_program_table(read_text_file(path), path.parent_path());
}

std::string format_program_table(const ProgramTable &table) {
    std::string out = std::string("prefix: ") + (table.prefix_free ? "true" : "false") + "\n";
    std::vector<const Program *> sorted;
    for (const auto &p : table.programs) {
        sorted.push_back(&p);
    }
    std::sort(sorted.begin(), sorted.end(), [](const Program *a, const Program *b) { return a->program < b->program; });
    for (const auto *p : sorted) {
        out += p->program.token() + " -> " + format_inline_qstring(p->output) + "\n";
    }
    return out;
}

InequalitySpec parse_inequality(std::string_view text, std::size_t n_parties) {
    InequalitySpec spec;
    spec.n_parties = n_parties;
    for (auto part : split(text, ';')) {
        part = trim(part);
        if (part.empty()) {
            continue;
        }
        const auto colon = part.find(':');
        if (colon == std::string_view::npos) {
            format_error(1, "inequality term must read '<parties>:<coefficient>'");
        }
        InequalityTerm term;
        for (auto idx : split(part.substr(0, colon), ',')) {
            idx = trim(idx);
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), v);
            if (ec != std::errc() || ptr != idx.data() + idx.size() || v == 0) {
                format_error(1, "party '" + std::string(idx) + "' is not a positive integer");
            }
            term.subset.push_back(v - 1);
        }
        term.coefficient = parse_double(trim(part.substr(colon + 1)), 1);
        spec.terms.push_back(std::move(term));
    }
    spec.validate();
    return spec;
}

}  // namespace sqkc
