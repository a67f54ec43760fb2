pub mod numeric_oracle;
