#pragma once

// Minimal batch figure backend: one drawing surface rendered twice, to an
// RGB raster saved as PNG and to an SVG document. Every figure writer also
// emits a JSON twin with the exact plotted numbers.

#include "emogeo/common.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace emogeo {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
};

// Sequential colormap for similarity matrices (viridis-like anchors).
Rgb colormap_sequential(double t);
// Diverging blue-white-red map for signed values.
Rgb colormap_diverging(double t);

class Surface {
public:
    virtual ~Surface() = default;
    virtual int width() const = 0;
    virtual int height() const = 0;
    virtual void fill_rect(double x, double y, double w, double h, Rgb c) = 0;
    virtual void line(double x0, double y0, double x1, double y1, Rgb c) = 0;
    // 5x7 bitmap font on raster; native text in SVG. anchor: -1 left, 0 center, 1 right.
    virtual void text(double x, double y, const std::string& s, Rgb c,
                      int size = 10, int anchor = -1) = 0;
    virtual void circle(double x, double y, double radius, Rgb c, bool filled) = 0;
};

class RasterSurface final : public Surface {
public:
    RasterSurface(int width, int height, Rgb background = {255, 255, 255});
    int width() const override { return width_; }
    int height() const override { return height_; }
    void fill_rect(double x, double y, double w, double h, Rgb c) override;
    void line(double x0, double y0, double x1, double y1, Rgb c) override;
    void text(double x, double y, const std::string& s, Rgb c, int size, int anchor) override;
    void circle(double x, double y, double radius, Rgb c, bool filled) override;
    void save_png(const std::filesystem::path& path) const;

private:
    void set_px(int x, int y, Rgb c);
    int width_, height_;
    std::vector<std::uint8_t> pixels_;  // RGB8
};

class SvgSurface final : public Surface {
public:
    SvgSurface(int width, int height, Rgb background = {255, 255, 255});
    int width() const override { return width_; }
    int height() const override { return height_; }
    void fill_rect(double x, double y, double w, double h, Rgb c) override;
    void line(double x0, double y0, double x1, double y1, Rgb c) override;
    void text(double x, double y, const std::string& s, Rgb c, int size, int anchor) override;
    void circle(double x, double y, double radius, Rgb c, bool filled) override;
    void save_svg(const std::filesystem::path& path) const;

private:
    int width_, height_;
    std::string body_;
};

// Figure writers render onto both surfaces and write <base>.svg, <base>.png
// and <base>.json. `out_path` may carry a .svg/.png extension or none.

struct FigurePaths {
    std::filesystem::path svg, png, json;
};

FigurePaths figure_paths(const std::filesystem::path& out_path);

// Annotated square heatmap; labels.size() must equal the matrix dimension.
// `value_range` maps the colormap; cells are annotated when the grid is
// small enough to stay legible.
FigurePaths render_heatmap(const MatD& matrix, const std::vector<std::string>& labels,
                           const std::filesystem::path& out_path,
                           const std::string& title = "",
                           const std::string& colorbar_label = "",
                           double vmin = 0.0, double vmax = 1.0);

struct BoxGroup {
    std::string name;
    std::vector<double> values;  // non-empty, finite
};

// Box + mean marker + individual points per group, reference line at
// `reference` when finite.
FigurePaths render_group_boxplot(const std::vector<BoxGroup>& groups,
                                 const std::filesystem::path& out_path,
                                 const std::string& title = "",
                                 double reference = std::numeric_limits<double>::quiet_NaN());

struct ScatterPanel {
    std::string x_label, y_label, note;
    std::vector<double> xs, ys;
};

FigurePaths render_scatter_panels(const std::vector<ScatterPanel>& panels,
                                  const std::filesystem::path& out_path,
                                  const std::string& title = "");

struct BarGroup {
    std::string name;                 // cluster label (e.g. a contrast)
    std::vector<double> values;       // one bar per series
};

FigurePaths render_grouped_bars(const std::vector<BarGroup>& groups,
                                const std::vector<std::string>& series_names,
                                const std::filesystem::path& out_path,
                                const std::string& title = "");

// Two or more heatmap panels side by side (shared scale).
struct HeatmapPanel {
    std::string title;
    MatD matrix;
    std::vector<std::string> labels;
};

FigurePaths render_heatmap_panels(const std::vector<HeatmapPanel>& panels,
                                  const std::filesystem::path& out_path,
                                  const std::string& title,
                                  const std::string& colorbar_label,
                                  double vmin, double vmax);

} // namespace emogeo
