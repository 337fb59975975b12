#include "rsabl/rule_text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace rsabl {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

void check_word(const std::string& word, std::size_t line_no) {
    if (word.empty()) {
        throw ParseError("rule line " + std::to_string(line_no) + ": empty word");
    }
    if (word.find_first_of(" \t!&=<#,") != std::string::npos) {
        throw ParseError("rule line " + std::to_string(line_no) + ": bad word '" + word + "'");
    }
}

// literal := ["!"] word [ "=" word ]
Descriptor parse_literal(std::string text, bool consequent, std::size_t line_no) {
    text = trim(text);
    Descriptor desc;
    if (!text.empty() && text[0] == '!') {
        desc.negated = true;
        text = trim(text.substr(1));
    }
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos) {
        check_word(text, line_no);
        if (consequent) {
            desc.value = text;
        } else {
            desc.attr = text;
            desc.value = "1";
        }
    } else {
        desc.attr = trim(text.substr(0, eq));
        desc.value = trim(text.substr(eq + 1));
        check_word(desc.attr, line_no);
        check_word(desc.value, line_no);
    }
    return desc;
}

}  // namespace

std::vector<Rule> parse_rules(const std::string& text) {
    std::vector<Rule> rules;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t arrow = line.find("<-");
        if (arrow == std::string::npos) {
            throw ParseError("rule line " + std::to_string(line_no) + ": missing '<-'");
        }
        if (line.find("<-", arrow + 2) != std::string::npos) {
            throw ParseError("rule line " + std::to_string(line_no) + ": more than one '<-'");
        }
        const std::string head = line.substr(0, arrow);
        const std::string body = line.substr(arrow + 2);
        if (head.find('&') != std::string::npos) {
            throw ParseError("rule line " + std::to_string(line_no) +
                             ": consequent must be a single literal");
        }

        Rule rule;
        rule.consequent = parse_literal(head, true, line_no);
        std::string cur;
        std::istringstream parts(body);
        while (std::getline(parts, cur, '&')) {
            rule.antecedent.push_back(parse_literal(cur, false, line_no));
        }
        if (rule.antecedent.empty()) {
            throw ParseError("rule line " + std::to_string(line_no) + ": empty antecedent");
        }
        std::sort(rule.antecedent.begin(), rule.antecedent.end());
        for (std::size_t i = 1; i < rule.antecedent.size(); ++i) {
            if (rule.antecedent[i].attr == rule.antecedent[i - 1].attr) {
                throw ParseError("rule line " + std::to_string(line_no) +
                                 ": attribute '" + rule.antecedent[i].attr +
                                 "' appears twice in the antecedent");
            }
        }
        rule.provenance = Provenance::Seeded;
        rules.push_back(std::move(rule));
    }
    return rules;
}

std::vector<Rule> load_rules(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rules(buf.str());
}

std::string format_descriptor(const Descriptor& desc) {
    std::string out;
    if (desc.negated) out += '!';
    if (desc.attr.empty()) {
        out += desc.value;
    } else if (desc.value == "1") {
        out += desc.attr;
    } else {
        out += desc.attr;
        out += '=';
        out += desc.value;
    }
    return out;
}

std::string format_rule(const Rule& rule) {
    std::string out;
    if (rule.consequent.negated) out += '!';
    if (rule.consequent.attr.empty()) {
        out += rule.consequent.value;
    } else {
        out += rule.consequent.attr;
        out += '=';
        out += rule.consequent.value;
    }
    out += " <- ";
    for (std::size_t i = 0; i < rule.antecedent.size(); ++i) {
        if (i) out += " & ";
        out += format_descriptor(rule.antecedent[i]);
    }
    return out;
}

std::string format_rules(const std::vector<Rule>& rules) {
    std::string out;
    for (const Rule& rule : rules) {
        out += format_rule(rule);
        out += '\n';
    }
    return out;
}

}  // namespace rsabl
