# init file for package
