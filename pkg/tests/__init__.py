# Test filer for ctcodes
