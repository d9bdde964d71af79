# Unipotent Symbol Toolkit - Source Package
