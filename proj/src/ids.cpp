#include "enptkit/ids.hpp"
#include "enptkit/error.hpp"

#include <algorithm>
#include <cctype>

namespace enptkit {

const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::EqualEndpoints: return "EqualEndpoints";
    case ErrorKind::DifferentHostTrees: return "DifferentHostTrees";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::NotUnionable: return "NotUnionable";
    case ErrorKind::NotATriangle: return "NotATriangle";
    case ErrorKind::NotBlueEdge: return "NotBlueEdge";
    case ErrorKind::NotContractible: return "NotContractible";
    case ErrorKind::NotAK4P4: return "NotAK4P4";
    case ErrorKind::Inapplicable: return "Inapplicable";
    case ErrorKind::WouldEmptyPath: return "WouldEmptyPath";
    case ErrorKind::PairContractionUndefined: return "PairContractionUndefined";
    case ErrorKind::IdMismatch: return "IdMismatch";
    case ErrorKind::NotHamiltonianPair: return "NotHamiltonianPair";
    case ErrorKind::NotOuterplanar: return "NotOuterplanar";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NoRepresentation: return "NoRepresentation";
    case ErrorKind::WrongSize: return "WrongSize";
    case ErrorKind::NoCommonEndpoint: return "NoCommonEndpoint";
    case ErrorKind::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    }
    return "Error";
}

bool natural_less(std::string_view a, std::string_view b)
{
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            auto ra = a.substr(i, ie - i), rb = b.substr(j, je - j);
            while (ra.size() > 1 && ra[0] == '0') ra.remove_prefix(1);
            while (rb.size() > 1 && rb[0] == '0') rb.remove_prefix(1);
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            if (ra != rb) return ra < rb;
            // equal value; shorter raw run (fewer leading zeros) first
            if (ie - i != je - j) return ie - i < je - j;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

std::vector<std::string> name_components(const std::string& id)
{
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t dot = id.find('.', start);
        out.push_back(id.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return out;
}

std::string merged_name(const std::string& p, const std::string& q)
{
    auto parts = name_components(p);
    auto more = name_components(q);
    parts.insert(parts.end(), more.begin(), more.end());
    std::sort(parts.begin(), parts.end(), NaturalLess{});
    std::string out;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k) out += '.';
        out += parts[k];
    }
    return out;
}

} // namespace enptkit
