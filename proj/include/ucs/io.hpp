#ifndef UCS_IO_HPP
#define UCS_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ucs/sequences.hpp"

// Text formats.
//
// Family file:   header `n <integer>`, then one member per line as
//                comma-separated 1-based elements (e.g. `1,3,4`).
//                `#` comments and blank lines are ignored.
// Sequence file: a family block for the target F, then ordered lines
//                `delete <elements>`, then optional `kind <plain|uc|ideal:i|optimal:i>`
//                (default plain).

namespace ucs {

struct parse_error : error {
    using error::error;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline std::vector<int> parse_elements(const std::string& text) {
    std::vector<int> elems;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw parse_error("empty element in set line: " + text);
        try {
            elems.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw parse_error("bad element '" + tok + "' in set line: " + text);
        }
    }
    return elems;
}

inline SetMask elements_to_mask(const std::vector<int>& elems, int n) {
    SetMask m = 0;
    for (int e : elems) {
        if (e < 1 || e > n)
            throw element_out_of_range("element " + std::to_string(e) + " outside 1.." +
                                       std::to_string(n));
        m |= SetMask{1} << (e - 1);
    }
    return m;
}

inline std::string mask_to_line(SetMask m) {
    std::string out;
    for (int i = 0; i < kMaxUniverse; ++i)
        if (m >> i & 1u) {
            if (!out.empty()) out += ',';
            out += std::to_string(i + 1);
        }
    return out;
}

struct RawLine {
    enum Kind { header, member, deletion, kind_tag } kind;
    std::string payload;
};

inline std::vector<RawLine> tokenize(std::istream& in) {
    std::vector<RawLine> lines;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n ", 0) == 0)
            lines.push_back({RawLine::header, trim(line.substr(2))});
        else if (line.rfind("delete ", 0) == 0)
            lines.push_back({RawLine::deletion, trim(line.substr(7))});
        else if (line.rfind("kind ", 0) == 0)
            lines.push_back({RawLine::kind_tag, trim(line.substr(5))});
        else
            lines.push_back({RawLine::member, line});
    }
    return lines;
}

}  // namespace detail

struct ParsedFamily {
    Family family;
    std::vector<std::string> warnings;
};

/// Parse a family file. With strip_empty, member lines denoting the empty
/// set (not representable here, but a line of no elements) are dropped with
/// a warning instead of rejected; duplicate member lines also warn.
inline ParsedFamily parse_family(std::istream& in, bool strip_empty = false) {
    auto lines = detail::tokenize(in);
    int n = -1;
    std::vector<SetMask> members;
    std::vector<std::string> warnings;
    for (const auto& l : lines) {
        switch (l.kind) {
            case detail::RawLine::header:
                if (n != -1) throw parse_error("duplicate 'n' header");
                try {
                    n = std::stoi(l.payload);
                } catch (const std::exception&) {
                    throw parse_error("bad universe size: " + l.payload);
                }
                require_universe(n);
                break;
            case detail::RawLine::member: {
                if (n == -1) throw parse_error("member line before 'n' header");
                if (l.payload == "-" || l.payload == "{}") {
                    if (strip_empty) {
                        warnings.push_back("dropped empty set");
                        break;
                    }
                    throw empty_set_rejected("input contains the empty set");
                }
                SetMask m = detail::elements_to_mask(detail::parse_elements(l.payload), n);
                if (std::find(members.begin(), members.end(), m) != members.end())
                    warnings.push_back("duplicate member " + mask_to_string(m) + " collapsed");
                else
                    members.push_back(m);
                break;
            }
            default:
                throw parse_error("unexpected line in family file");
        }
    }
    if (n == -1) throw parse_error("missing 'n' header");
    return {Family(n, std::move(members)), std::move(warnings)};
}

inline void render_family(std::ostream& out, const Family& f) {
    out << "n " << f.universe_size() << "\n";
    for (SetMask m : f.members()) out << detail::mask_to_line(m) << "\n";
}

inline std::string kind_tag(const DeletionSequence& seq) {
    switch (seq.kind) {
        case SeqKind::plain: return "plain";
        case SeqKind::union_closed: return "uc";
        case SeqKind::ideal: return "ideal:" + std::to_string(seq.element);
        case SeqKind::optimal: return "optimal:" + std::to_string(seq.element);
    }
    return "plain";
}

inline ParsedFamily parse_family_block(const std::vector<detail::RawLine>& lines, std::size_t& pos,
                                       bool strip_empty) {
    std::stringstream block;
    for (; pos < lines.size(); ++pos) {
        const auto& l = lines[pos];
        if (l.kind == detail::RawLine::deletion || l.kind == detail::RawLine::kind_tag) break;
        if (l.kind == detail::RawLine::header)
            block << "n " << l.payload << "\n";
        else
            block << l.payload << "\n";
    }
    return parse_family(block, strip_empty);
}

struct ParsedSequence {
    DeletionSequence sequence;
    std::vector<std::string> warnings;
};

/// Parse a sequence file and check the structural invariants (throws
/// malformed_sequence when the deletions do not partition A - F).
inline ParsedSequence parse_sequence(std::istream& in, bool strip_empty = false) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::stringstream stream(buf.str());
    auto lines = detail::tokenize(stream);
    std::size_t pos = 0;
    ParsedFamily pf = parse_family_block(lines, pos, strip_empty);
    DeletionSequence seq;
    seq.universe_size = pf.family.universe_size();
    seq.target = pf.family;
    for (; pos < lines.size(); ++pos) {
        const auto& l = lines[pos];
        if (l.kind == detail::RawLine::deletion) {
            seq.deletions.push_back(detail::elements_to_mask(detail::parse_elements(l.payload),
                                                             seq.universe_size));
        } else if (l.kind == detail::RawLine::kind_tag) {
            std::string tag = l.payload;
            if (tag == "plain")
                seq.kind = SeqKind::plain;
            else if (tag == "uc")
                seq.kind = SeqKind::union_closed;
            else if (tag.rfind("ideal:", 0) == 0) {
                seq.kind = SeqKind::ideal;
                seq.element = std::stoi(tag.substr(6));
            } else if (tag.rfind("optimal:", 0) == 0) {
                seq.kind = SeqKind::optimal;
                seq.element = std::stoi(tag.substr(8));
            } else
                throw parse_error("unknown sequence kind: " + tag);
        } else {
            throw parse_error("unexpected line after deletion block");
        }
    }
    // surface structural breakage at load time
    validate_sequence(DeletionSequence{seq.universe_size, seq.target, seq.deletions,
                                       SeqKind::plain, 0});
    return {std::move(seq), std::move(pf.warnings)};
}

inline void render_sequence(std::ostream& out, const DeletionSequence& seq) {
    render_family(out, seq.target);
    for (SetMask m : seq.deletions) out << "delete " << detail::mask_to_line(m) << "\n";
    out << "kind " << kind_tag(seq) << "\n";
}

}  // namespace ucs

#endif
