#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

inline std::vector<std::string> corpus_files(const std::string& sub)
{
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(std::string(FILTERLAB_DATA_DIR) + "/corpus/" + sub))
        if (e.path().extension() == ".pcg") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> all_corpus_files()
{
    std::vector<std::string> out;
    for (const char* sub : {"order16", "order81", "misc"}) {
        auto f = corpus_files(sub);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}
