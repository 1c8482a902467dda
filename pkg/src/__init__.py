# Empty file to mark as package
