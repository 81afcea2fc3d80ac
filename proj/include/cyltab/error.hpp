#pragma once

#include <stdexcept>
#include <string>

namespace cyltab {

enum class Errc {
    WindowNotDecreasing,
    WrapViolated,
    TooManyParts,
    PartTooWide,
    ParamsMismatch,
    BadParams,
    RowLengthMismatch,
    RowNotWeaklyIncreasing,
    ColumnNotStrictlyIncreasing,
    NotInsideCocorner,
    NotOutsideCorner,
    QueueNotRegular,
    QueueNotReverseRegular,
    PreconditionViolated,
    MismatchedInnerShapes,
    MismatchedOuterShapes,
    InitialMismatch,
    InvalidTurn,
    PatternMismatch,
    NotAPermutation,
    NotSameMultiset,
    SchemaError,
};

inline const char* errc_name(Errc e) {
    switch (e) {
    case Errc::WindowNotDecreasing: return "WindowNotDecreasing";
    case Errc::WrapViolated: return "WrapViolated";
    case Errc::TooManyParts: return "TooManyParts";
    case Errc::PartTooWide: return "PartTooWide";
    case Errc::ParamsMismatch: return "ParamsMismatch";
    case Errc::BadParams: return "BadParams";
    case Errc::RowLengthMismatch: return "RowLengthMismatch";
    case Errc::RowNotWeaklyIncreasing: return "RowNotWeaklyIncreasing";
    case Errc::ColumnNotStrictlyIncreasing: return "ColumnNotStrictlyIncreasing";
    case Errc::NotInsideCocorner: return "NotInsideCocorner";
    case Errc::NotOutsideCorner: return "NotOutsideCorner";
    case Errc::QueueNotRegular: return "QueueNotRegular";
    case Errc::QueueNotReverseRegular: return "QueueNotReverseRegular";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::MismatchedInnerShapes: return "MismatchedInnerShapes";
    case Errc::MismatchedOuterShapes: return "MismatchedOuterShapes";
    case Errc::InitialMismatch: return "InitialMismatch";
    case Errc::InvalidTurn: return "InvalidTurn";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::NotSameMultiset: return "NotSameMultiset";
    case Errc::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

// Domain error. `row`, `col` and `index` are filled when the error kind names
// a location; `detail` carries the precondition clause or schema path.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string detail = {}, int row = -1, int col = 0, int index = -1)
        : std::runtime_error(make_what(code, detail, row, col, index)),
          code_(code), detail_(std::move(detail)), row_(row), col_(col), index_(index) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }
    int index() const noexcept { return index_; }

private:
    static std::string make_what(Errc code, const std::string& detail, int row, int col, int index) {
        std::string s = errc_name(code);
        if (row >= 0) s += " row=" + std::to_string(row) + " col=" + std::to_string(col);
        if (index >= 0) s += " index=" + std::to_string(index);
        if (!detail.empty()) s += ": " + detail;
        return s;
    }

    Errc code_;
    std::string detail_;
    int row_;
    int col_;
    int index_;
};

}  // namespace cyltab
