"""knotoid."""
