#include "amco/core/semantic_grid.hpp"

namespace amco {

SemanticGrid::SemanticGrid(int width, int height, int n)
    : width_(width), height_(height), n_(n) {
    if (width <= 0 || height <= 0 || n <= 0)
        throw Error("SemanticGrid dimensions must be positive");
    cells_.resize(static_cast<std::size_t>(width) * height);
}

SemanticGrid discretize_semantic(const LabelImage& image, int n) {
    if (n < 1) throw Error("discretize_semantic: n must be >= 1");
    if (image.width <= 0 || image.height <= 0 ||
        image.px.size() != static_cast<std::size_t>(image.width) * image.height)
        throw Error("discretize_semantic: empty or inconsistent image");
    if (image.width < n || image.height < n)
        throw Error("discretize_semantic: image smaller than one cell");

    const int gw = (image.width + n - 1) / n;
    const int gh = (image.height + n - 1) / n;
    SemanticGrid grid(gw, gh, n);

    for (int gi = 0; gi < gh; ++gi) {
        for (int gj = 0; gj < gw; ++gj) {
            SemanticCell& cell = grid.at(gi, gj);
            std::uint32_t counted = 0;
            const int r0 = gi * n, c0 = gj * n;
            const int r1 = std::min(r0 + n, image.height);
            const int c1 = std::min(c0 + n, image.width);
            for (int r = r0; r < r1; ++r) {
                for (int c = c0; c < c1; ++c) {
                    ++cell.histogram[static_cast<int>(image.at(r, c))];
                    ++counted;
                }
            }
            // Pad partial border cells so the histogram always sums to n^2.
            cell.histogram[static_cast<int>(TerrainClass::Unknown)] +=
                static_cast<std::uint32_t>(n) * n - counted;

            std::uint32_t best = 0;
            int best_class = static_cast<int>(TerrainClass::Unknown);
            for (int k = 0; k < kTerrainClassCount; ++k) {
                if (cell.histogram[k] > best) {
                    best = cell.histogram[k];
                    best_class = k;
                }
            }
            cell.majority = static_cast<TerrainClass>(best_class);
        }
    }
    return grid;
}

}  // namespace amco
