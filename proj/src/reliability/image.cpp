#include "amco/reliability/image.hpp"

#include <fstream>

namespace amco {

RgbImage read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open image: " + path);

    auto next_token = [&in, &path]() -> std::string {
        std::string tok;
        while (in >> tok) {
            if (tok[0] == '#') {
                std::string rest;
                std::getline(in, rest);
                continue;
            }
            return tok;
        }
        throw Error("truncated ppm header: " + path);
    };

    if (next_token() != "P6") throw Error("not a P6 ppm: " + path);
    const int w = std::stoi(next_token());
    const int h = std::stoi(next_token());
    const int maxval = std::stoi(next_token());
    if (w <= 0 || h <= 0 || maxval != 255)
        throw Error("unsupported ppm geometry in " + path);
    in.get();  // single whitespace after maxval

    RgbImage img(w, h);
    in.read(reinterpret_cast<char*>(img.px.data()),
            static_cast<std::streamsize>(img.px.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.px.size()))
        throw Error("truncated ppm payload: " + path);
    return img;
}

void write_ppm(const RgbImage& img, const std::string& path) {
    if (img.empty()) throw Error("write_ppm: empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "P6\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.px.data()),
              static_cast<std::streamsize>(img.px.size()));
    if (!out) throw Error("write failed: " + path);
}

static RgbImage transpose(const RgbImage& img) {
    RgbImage out(img.height, img.width);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c) {
            const auto* p = img.pixel(r, c);
            out.set(c, r, p[0], p[1], p[2]);
        }
    return out;
}

RgbImage box_blur(const RgbImage& img, int width) {
    if (width == 1) return img;
    return transpose(box_blur_horizontal(transpose(box_blur_horizontal(img, width)), width));
}

RgbImage box_blur_horizontal(const RgbImage& img, int width) {
    if (img.empty()) throw Error("box_blur_horizontal: empty image");
    if (width < 1 || width % 2 == 0)
        throw Error("box_blur_horizontal: width must be odd and >= 1");
    if (width == 1) return img;

    RgbImage out(img.width, img.height);
    const int half = width / 2;
    for (int r = 0; r < img.height; ++r) {
        for (int ch = 0; ch < 3; ++ch) {
            // Sliding sum with clamped edges.
            int sum = 0;
            auto sample = [&](int c) {
                if (c < 0) c = 0;
                if (c >= img.width) c = img.width - 1;
                return static_cast<int>(img.pixel(r, c)[ch]);
            };
            for (int c = -half; c <= half; ++c) sum += sample(c);
            for (int c = 0; c < img.width; ++c) {
                out.pixel(r, c)[ch] =
                    static_cast<std::uint8_t>((sum + width / 2) / width);
                sum += sample(c + half + 1) - sample(c - half);
            }
        }
    }
    return out;
}

}  // namespace amco
