#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/geometry.hpp"

namespace modlap {

// Set of nonzero integer offsets defining the neighborhood of a lattice cell.
class Stencil {
public:
    static Stencil von_neumann();  // the 4 orthogonal offsets
    static Stencil diag();         // the 4 diagonal offsets
    static Stencil moore();        // all 8 surrounding offsets

    // Accepts "von-neumann", "diag" or "moore" (plus '_' spelling variants).
    static Stencil builtin(std::string_view name);

    // Custom neighborhood from odd-sized 0/1 mask rows; the mask center is the
    // cell itself and must be 0.
    static Stencil from_mask_rows(const std::vector<std::string>& rows);
    static Stencil from_file(const std::filesystem::path& path);

    std::span<const Point> offsets() const { return offsets_; }
    int64_t radius() const { return radius_; }
    size_t size() const { return offsets_.size(); }
    const std::string& name() const { return name_; }

    bool d4_symmetric() const;

private:
    Stencil(std::vector<Point> offsets, std::string name);

    std::vector<Point> offsets_;
    int64_t radius_ = 1;
    std::string name_;
};

} // namespace modlap
