c : p & p -> p
