"""InfoFlow application package."""
